#include "butson/matrices.hpp"

#include <numeric>
#include <stdexcept>

#include "butson/numtheory.hpp"

namespace butson {

RootMatrix::RootMatrix(unsigned m, unsigned l) : m_(m), l_(l), exps_(std::size_t(m) * m, 0u) {
    if (m == 0 || l == 0)
        throw std::invalid_argument("RootMatrix: dimension and root order must be positive");
}

RootMatrix::RootMatrix(unsigned m, unsigned l, std::vector<unsigned> exps)
    : m_(m), l_(l), exps_(std::move(exps)) {
    if (m == 0 || l == 0)
        throw std::invalid_argument("RootMatrix: dimension and root order must be positive");
    if (exps_.size() != std::size_t(m) * m)
        throw std::invalid_argument("RootMatrix: exponent count must be m*m");
    for (unsigned e : exps_) {
        if (e >= l) throw std::invalid_argument("RootMatrix: exponent out of range [0, l)");
    }
}

void RootMatrix::set_exp(unsigned row, unsigned col, unsigned e) {
    if (e >= l_) throw std::invalid_argument("RootMatrix: exponent out of range [0, l)");
    exps_[row * m_ + col] = e;
}

RootMatrix RootMatrix::circulant(unsigned l, std::span<const unsigned> first_row) {
    const auto m = static_cast<unsigned>(first_row.size());
    RootMatrix M(m, l);
    for (unsigned k = 0; k < m; ++k) {
        if (first_row[k] >= l)
            throw std::invalid_argument("circulant: exponent out of range [0, l)");
    }
    for (unsigned j = 0; j < m; ++j)
        for (unsigned k = 0; k < m; ++k) M.exps_[j * m + k] = first_row[(k + m - j) % m];
    return M;
}

RootMatrix RootMatrix::fourier(unsigned m) {
    RootMatrix M(m, m);
    for (unsigned j = 0; j < m; ++j)
        for (unsigned k = 0; k < m; ++k)
            M.exps_[j * m + k] = static_cast<unsigned>((std::uint64_t(j) * k) % m);
    return M;
}

std::vector<unsigned> RootMatrix::first_row() const {
    return {exps_.begin(), exps_.begin() + m_};
}

CycInt RootMatrix::entry(unsigned row, unsigned col) const {
    return CycInt::root(l_, exp_at(row, col));
}

// ---------------------------------------------------------------------------
// CycMatrix

CycMatrix::CycMatrix(unsigned m, unsigned order)
    : m_(m), order_(order), entries_(std::size_t(m) * m, CycInt(order)) {
    if (m == 0) throw std::invalid_argument("CycMatrix: dimension must be positive");
}

CycMatrix CycMatrix::identity(unsigned m, unsigned order, const BigInt& scale) {
    CycMatrix I(m, order);
    for (unsigned j = 0; j < m; ++j) I.at(j, j) = CycInt::integer(order, scale);
    return I;
}

CycMatrix CycMatrix::from_roots(const RootMatrix& M) {
    CycMatrix C(M.dim(), M.root_order());
    for (unsigned j = 0; j < M.dim(); ++j)
        for (unsigned k = 0; k < M.dim(); ++k) C.at(j, k) = M.entry(j, k);
    return C;
}

CycMatrix CycMatrix::operator*(const CycMatrix& other) const {
    if (m_ != other.m_ || order_ != other.order_)
        throw std::invalid_argument("CycMatrix: dimension or order mismatch");
    CycMatrix R(m_, order_);
    for (unsigned j = 0; j < m_; ++j) {
        for (unsigned k = 0; k < m_; ++k) {
            CycInt acc(order_);
            for (unsigned s = 0; s < m_; ++s) acc = acc + at(j, s) * other.at(s, k);
            R.at(j, k) = std::move(acc);
        }
    }
    return R;
}

CycMatrix CycMatrix::conj_transpose() const {
    CycMatrix R(m_, order_);
    for (unsigned j = 0; j < m_; ++j)
        for (unsigned k = 0; k < m_; ++k) R.at(k, j) = at(j, k).conj();
    return R;
}

bool CycMatrix::equals(const CycMatrix& other) const {
    if (m_ != other.m_ || order_ != other.order_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!entries_[i].equals(other.entries_[i])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Predicates and operations

BhVerification verify_bh(const RootMatrix& M) {
    const unsigned m = M.dim();
    const unsigned l = M.root_order();
    // Gram entry (j,k) = sum_s zeta^(e_js - e_ks); accumulate exponent counts.
    std::vector<BigInt> counts(l);
    for (unsigned j = 0; j < m; ++j) {
        // Diagonal: every term has exponent 0, so the entry is exactly m.
        for (unsigned k = j + 1; k < m; ++k) {
            for (auto& c : counts) c = 0;
            for (unsigned s = 0; s < m; ++s) {
                unsigned d = M.exp_at(j, s) + l - M.exp_at(k, s);
                if (d >= l) d -= l;
                counts[d] += 1;
            }
            CycInt g(l, counts);
            if (!g.is_zero()) return {false, GramViolation{j, k, std::move(g)}};
        }
    }
    return {true, std::nullopt};
}

bool is_symmetric(const RootMatrix& M) {
    for (unsigned j = 0; j < M.dim(); ++j)
        for (unsigned k = j + 1; k < M.dim(); ++k)
            if (M.exp_at(j, k) != M.exp_at(k, j)) return false;
    return true;
}

bool is_circulant(const RootMatrix& M) {
    const unsigned m = M.dim();
    for (unsigned j = 1; j < m; ++j)
        for (unsigned k = 0; k < m; ++k)
            if (M.exp_at(j, k) != M.exp_at(0, (k + m - j) % m)) return false;
    return true;
}

bool is_unreal(const RootMatrix& M) {
    const unsigned l = M.root_order();
    for (unsigned e : M.exponents()) {
        if ((2u * e) % l == 0) return false;
    }
    return true;
}

CycMatrix power(const RootMatrix& M, unsigned i) {
    if (i == 0) throw std::invalid_argument("power: exponent must be >= 1");
    CycMatrix base = CycMatrix::from_roots(M);
    CycMatrix result = CycMatrix::identity(M.dim(), M.root_order());
    while (i > 0) {
        if (i & 1u) result = result * base;
        i >>= 1u;
        if (i > 0) base = base * base;
    }
    return result;
}

RootMatrix kronecker(const RootMatrix& A, const RootMatrix& B) {
    const unsigned m1 = A.dim(), m2 = B.dim();
    const auto L64 = lcm_checked(A.root_order(), B.root_order());
    if (L64 > 0xffffffffull)
        throw std::invalid_argument("kronecker: lcm of root orders too large");
    const auto L = static_cast<unsigned>(L64);
    const unsigned f1 = L / A.root_order(), f2 = L / B.root_order();
    RootMatrix K(m1 * m2, L);
    for (unsigned j1 = 0; j1 < m1; ++j1)
        for (unsigned k1 = 0; k1 < m1; ++k1)
            for (unsigned j2 = 0; j2 < m2; ++j2)
                for (unsigned k2 = 0; k2 < m2; ++k2)
                    K.set_exp(j1 * m2 + j2, k1 * m2 + k2,
                              (A.exp_at(j1, k1) * f1 + B.exp_at(j2, k2) * f2) % L);
    return K;
}

}  // namespace butson
