#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "butson/cyclotomic.hpp"

namespace butson {

/**
 * An m x m matrix of l-th roots of unity stored as its exponent matrix:
 * entry (j, k) is zeta_l^exp_at(j, k), all exponents in [0, l).
 */
class RootMatrix {
public:
    RootMatrix(unsigned m, unsigned l);
    RootMatrix(unsigned m, unsigned l, std::vector<unsigned> exps);

    /// Circulant matrix from its first row: row j is the first row cyclically
    /// shifted right j places.
    static RootMatrix circulant(unsigned l, std::span<const unsigned> first_row);
    /// Fourier matrix of size m: exponent (j*k) mod m over l = m.
    static RootMatrix fourier(unsigned m);

    unsigned dim() const noexcept { return m_; }
    unsigned root_order() const noexcept { return l_; }
    unsigned exp_at(unsigned row, unsigned col) const { return exps_[row * m_ + col]; }
    void set_exp(unsigned row, unsigned col, unsigned e);
    std::span<const unsigned> exponents() const noexcept { return exps_; }
    std::vector<unsigned> first_row() const;

    /// Entry (row, col) as an element of Z[zeta_l].
    CycInt entry(unsigned row, unsigned col) const;

    bool operator==(const RootMatrix&) const = default;

private:
    unsigned m_;
    unsigned l_;
    std::vector<unsigned> exps_;
};

/// Square matrix over Z[zeta_order], all entries of one common order.
class CycMatrix {
public:
    CycMatrix(unsigned m, unsigned order);
    static CycMatrix identity(unsigned m, unsigned order, const BigInt& scale = 1);
    static CycMatrix from_roots(const RootMatrix& M);

    unsigned dim() const noexcept { return m_; }
    unsigned order() const noexcept { return order_; }
    const CycInt& at(unsigned row, unsigned col) const { return entries_[row * m_ + col]; }
    CycInt& at(unsigned row, unsigned col) { return entries_[row * m_ + col]; }

    CycMatrix operator*(const CycMatrix& other) const;
    CycMatrix conj_transpose() const;
    /// Entrywise ring equality.
    bool equals(const CycMatrix& other) const;

private:
    unsigned m_;
    unsigned order_;
    std::vector<CycInt> entries_;
};

struct GramViolation {
    unsigned row;
    unsigned col;
    CycInt value;  // the offending Gram entry (m on the diagonal expected, 0 elsewhere)
};

struct BhVerification {
    bool is_bh = false;
    std::optional<GramViolation> violation;
};

/// Exact Gram check M M* = m I over Z[zeta_l]. Only the upper triangle is
/// computed (the Gram matrix is Hermitian). A failing matrix yields a report
/// with the first violated cell, never an error.
BhVerification verify_bh(const RootMatrix& M);

bool is_symmetric(const RootMatrix& M);
bool is_circulant(const RootMatrix& M);
/// No real entries: no exponent a with 2a = 0 (mod l).
bool is_unreal(const RootMatrix& M);

/// Exact matrix power M^i over Z[zeta_l], i >= 1 (binary exponentiation).
CycMatrix power(const RootMatrix& M, unsigned i);

/// Kronecker product; exponents combine in Z/lcm(l1, l2).
RootMatrix kronecker(const RootMatrix& A, const RootMatrix& B);

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(unsigned line, unsigned col, const std::string& what);
    unsigned line() const noexcept { return line_; }
    unsigned col() const noexcept { return col_; }

private:
    unsigned line_;
    unsigned col_;
};

/// Matrix text format:
///   bh <m> <l>      followed by m lines of m exponents in [0, l), or
///   circ <m> <l>    followed by one line of m exponents (the first row).
RootMatrix parse_matrix(std::string_view text);

/// Canonical serialization in the full `bh` form; parse(format(M)) == M.
std::string format_matrix(const RootMatrix& M);

}  // namespace butson
