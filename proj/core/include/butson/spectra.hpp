#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "butson/matrices.hpp"

namespace butson {

/// One eigenvalue of the associated unitary matrix B = M / sqrt(m).
struct EigenFinding {
    std::complex<double> value;      ///< numeric eigenvalue of B
    std::optional<CycInt> exact_h;   ///< circulant path: h with value = h / sqrt(m)
    std::optional<unsigned> order;   ///< minimal k with value^k = 1, when found
    bool primitive = false;          ///< order found (minimality makes it primitive)
};

enum class SpectrumFailure {
    non_root_eigenvalue,   ///< exact path: provably not a root of unity
    mixed_orders,          ///< all orders found but they disagree
    order_bound_exceeded,  ///< numeric path: no order within the search bound
};

const char* to_string(SpectrumFailure f);

struct SpectrumReport {
    std::vector<EigenFinding> findings;  ///< sorted by principal angle in [0, 2pi)
    std::optional<unsigned> common_k;    ///< present iff every order equals it
    std::optional<SpectrumFailure> failure;
    bool exact_path = false;
    std::uint64_t order_bound = 0;  ///< the order/denominator bound actually used
};

/// Eigensolver failure (iteration cap or residual check), with the offending index.
class NumericFailure : public std::runtime_error {
public:
    NumericFailure(unsigned index, const std::string& what)
        : std::runtime_error(what), index_(index) {}
    unsigned index() const noexcept { return index_; }

private:
    unsigned index_;
};

/// Exact eigenvalues of a circulant M: h_j = sum_s zeta_L^(a_s L/l + j s L/m)
/// for j = 0..m-1 with L = lcm(l, m), each an element of Z[zeta_L]. These are
/// eigenvalues of M; the associated unitary has eigenvalues h_j / sqrt(m).
std::vector<CycInt> circulant_eigenvalues_exact(const RootMatrix& M);

/// Eigenvalues of B = M / sqrt(m) by Hessenberg reduction and shifted QR,
/// sorted by principal angle. Each eigenvalue's residual against its computed
/// eigenvector is verified to 1e-9 * ||B||; violations throw NumericFailure.
std::vector<std::complex<double>> eig_numeric(const RootMatrix& M);

/// Minimal d >= 1 with (h / sqrt(m))^d = 1, searching the divisors of `bound`
/// in increasing order. Requires h * conj(h) = m exactly. Even d is decided
/// purely in Z[zeta]: h^d = m^(d/2). Odd d is decided by h^(2d) = m^d plus a
/// sign that is safely resolved numerically (the candidates +1 and -1 are two
/// apart). Absent if no divisor of `bound` works.
std::optional<unsigned> order_exact(const CycInt& h, unsigned m, std::uint64_t bound);

/// Minimal q <= q_max with |lambda^q - 1| < eps, where the candidate q comes
/// from the continued-fraction approximation of arg(lambda) / 2pi. Absent when
/// no convergent passes. Expects |lambda| within 1e-6 of 1.
std::optional<unsigned> order_numeric(std::complex<double> lambda, std::uint64_t q_max,
                                      double eps = 1e-8);

/// Full spectrum pipeline for a verified Butson-Hadamard matrix: exact path
/// for circulants, numeric path otherwise; sets common_k when all per-
/// eigenvalue orders agree.
SpectrumReport spectrum_report(const RootMatrix& M);

namespace detail {

/// Order bound for the exact circulant path: every root-of-unity eigenvalue of
/// B lies in Q(zeta_L, sqrt(m)), so its order divides lcm(2, L, 4m).
std::uint64_t exact_order_bound(unsigned m, unsigned l);

/// Denominator bound for the numeric path. A root-of-unity eigenvalue zeta_q
/// of B has degree phi(q) <= 2 m phi(l) over Q, so q <= max{q : phi(q) <= 2 m phi(l)}.
std::uint64_t numeric_order_bound(unsigned m, unsigned l);

/// Principal angle in [0, 2pi), with values within 1e-9 of a full turn
/// wrapped to 0 so near-real-positive values sort first.
double principal_angle(std::complex<double> z);

}  // namespace detail

}  // namespace butson
