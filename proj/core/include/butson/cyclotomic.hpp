#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace butson {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Integer polynomial, coefficients stored in ascending degree.
 * The zero polynomial has an empty coefficient vector; otherwise the
 * leading coefficient is nonzero.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly monomial(unsigned degree, BigInt coeff = 1);
    /// x^n - 1
    static IntPoly power_minus_one(unsigned n);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of the polynomial, -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(unsigned d) const;
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    bool operator==(const IntPoly& other) const noexcept { return coeffs_ == other.coeffs_; }

    /// Remainder after division by a monic divisor; exact integer arithmetic.
    IntPoly remainder_by_monic(const IntPoly& monic_divisor) const;
    /// Quotient of an exact division by a monic divisor; throws std::domain_error
    /// if the remainder is nonzero.
    IntPoly divide_exact(const IntPoly& monic_divisor) const;

    std::string str() const;

private:
    std::vector<BigInt> coeffs_;

    void trim();
};

/// The n-th cyclotomic polynomial, monic of degree totient(n). Computed by
/// exact division of x^n - 1 by the lower-order cyclotomic polynomials and
/// cached; the cache is safe for concurrent use. Throws std::invalid_argument
/// for n = 0.
const IntPoly& cyclotomic_polynomial(unsigned n);

/**
 * An element of Z[zeta_N]: an integer coefficient for each exponent class
 * t mod N, representing sum_t coeffs[t] * zeta_N^t.
 *
 * The representation is not unique; ring equality is decided by reducing the
 * difference modulo the N-th cyclotomic polynomial (is_zero / equals). No
 * floating point is ever consulted for an equality decision.
 */
class CycInt {
public:
    /// Zero of the given order.
    explicit CycInt(unsigned order);
    CycInt(unsigned order, std::vector<BigInt> coeffs);

    /// zeta_order^exponent (exponent reduced mod order, negatives allowed).
    static CycInt root(unsigned order, long long exponent);
    /// The rational integer v viewed in Z[zeta_order].
    static CycInt integer(unsigned order, BigInt v);

    unsigned order() const noexcept { return order_; }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    const BigInt& coeff(unsigned t) const { return coeffs_.at(t); }

    CycInt operator+(const CycInt& other) const;
    CycInt operator-(const CycInt& other) const;
    CycInt operator-() const;
    /// Cyclic convolution of coefficient vectors (indices mod order).
    CycInt operator*(const CycInt& other) const;
    CycInt scaled(const BigInt& c) const;
    /// Complex conjugate: coefficient at t moves to -t mod order.
    CycInt conj() const;
    CycInt pow(unsigned e) const;

    /// Reinterpret in Z[zeta_new_order]; order must divide new_order.
    /// Preserves the complex value exactly.
    CycInt embed(unsigned new_order) const;

    /// True iff the value is zero in Z[zeta_order] (remainder mod the
    /// cyclotomic polynomial vanishes).
    bool is_zero() const;
    bool equals(const CycInt& other) const;
    bool equals(const BigInt& v) const;

    /// If the value equals zeta_order^t for some t, that t; otherwise absent.
    /// Decides by exact equality against all `order` candidates.
    std::optional<unsigned> as_root_of_unity() const;

    /// Floating-point evaluation sum_t coeffs[t] * e^(2 pi i t / order).
    /// For sign and branch resolution only, never for equality decisions.
    std::complex<double> eval() const;

    std::string str() const;

private:
    unsigned order_;
    std::vector<BigInt> coeffs_;
};

inline bool operator==(const CycInt& a, const CycInt& b) { return a.equals(b); }

}  // namespace butson
