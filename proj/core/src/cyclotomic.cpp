#include "butson/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "butson/numtheory.hpp"

namespace butson {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(unsigned degree, BigInt coeff) {
    if (coeff == 0) return IntPoly{};
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coeff);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::power_minus_one(unsigned n) {
    std::vector<BigInt> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

const BigInt& IntPoly::coeff(unsigned d) const {
    static const BigInt zero = 0;
    return d < coeffs_.size() ? coeffs_[d] : zero;
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < other.coeffs_.size()) c[i] += other.coeffs_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < other.coeffs_.size()) c[i] -= other.coeffs_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return IntPoly{};
    std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::remainder_by_monic(const IntPoly& d) const {
    if (d.is_zero() || d.coeffs_.back() != 1)
        throw std::invalid_argument("remainder_by_monic: divisor must be monic");
    const std::size_t dd = d.coeffs_.size() - 1;  // divisor degree
    std::vector<BigInt> r = coeffs_;
    while (r.size() > dd) {
        BigInt lead = std::move(r.back());
        r.pop_back();
        if (lead == 0) continue;
        const std::size_t shift = r.size() - dd;
        for (std::size_t j = 0; j < dd; ++j) {
            if (d.coeffs_[j] != 0) r[shift + j] -= lead * d.coeffs_[j];
        }
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero() || d.coeffs_.back() != 1)
        throw std::invalid_argument("divide_exact: divisor must be monic");
    const std::size_t dd = d.coeffs_.size() - 1;
    std::vector<BigInt> r = coeffs_;
    if (r.size() <= dd) {
        if (!is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
        return IntPoly{};
    }
    std::vector<BigInt> q(r.size() - dd);
    while (r.size() > dd) {
        BigInt lead = std::move(r.back());
        r.pop_back();
        const std::size_t shift = r.size() - dd;
        if (lead != 0) {
            for (std::size_t j = 0; j < dd; ++j) {
                if (d.coeffs_[j] != 0) r[shift + j] -= lead * d.coeffs_[j];
            }
        }
        q[shift] = std::move(lead);
    }
    for (const BigInt& c : r) {
        if (c != 0) throw std::domain_error("divide_exact: nonzero remainder");
    }
    return IntPoly(std::move(q));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const BigInt& c = coeffs_[d];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        BigInt a = abs(c);
        if (a != 1 || d == 0) os << a.str();
        if (d > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

IntPoly compute_cyclotomic(unsigned n) {
    IntPoly numerator = IntPoly::power_minus_one(n);
    for (unsigned d : divisors(n)) {
        if (d == n) continue;
        numerator = numerator.divide_exact(cyclotomic_polynomial(d));
    }
    return numerator;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    static std::shared_mutex mutex;
    static std::map<unsigned, IntPoly> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPoly phi = compute_cyclotomic(n);  // outside the lock; recursion fills divisors
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(phi));
    (void)inserted;  // concurrent duplicate insert is a no-op; map nodes are stable
    return it->second;
}

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt(unsigned order) : order_(order), coeffs_(order) {
    if (order == 0) throw std::invalid_argument("CycInt: order must be positive");
}

CycInt::CycInt(unsigned order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order == 0) throw std::invalid_argument("CycInt: order must be positive");
    if (coeffs_.size() != order)
        throw std::invalid_argument("CycInt: coefficient count must equal order");
}

CycInt CycInt::root(unsigned order, long long exponent) {
    CycInt z(order);
    long long t = exponent % static_cast<long long>(order);
    if (t < 0) t += order;
    z.coeffs_[static_cast<std::size_t>(t)] = 1;
    return z;
}

CycInt CycInt::integer(unsigned order, BigInt v) {
    CycInt z(order);
    z.coeffs_[0] = std::move(v);
    return z;
}

CycInt CycInt::operator+(const CycInt& other) const {
    if (order_ != other.order_)
        throw std::invalid_argument("CycInt: order mismatch (embed into a common order first)");
    CycInt z(order_);
    for (unsigned t = 0; t < order_; ++t) z.coeffs_[t] = coeffs_[t] + other.coeffs_[t];
    return z;
}

CycInt CycInt::operator-(const CycInt& other) const {
    if (order_ != other.order_)
        throw std::invalid_argument("CycInt: order mismatch (embed into a common order first)");
    CycInt z(order_);
    for (unsigned t = 0; t < order_; ++t) z.coeffs_[t] = coeffs_[t] - other.coeffs_[t];
    return z;
}

CycInt CycInt::operator-() const {
    CycInt z(order_);
    for (unsigned t = 0; t < order_; ++t) z.coeffs_[t] = -coeffs_[t];
    return z;
}

CycInt CycInt::operator*(const CycInt& other) const {
    if (order_ != other.order_)
        throw std::invalid_argument("CycInt: order mismatch (embed into a common order first)");
    CycInt z(order_);
    for (unsigned s = 0; s < order_; ++s) {
        if (coeffs_[s] == 0) continue;
        for (unsigned t = 0; t < order_; ++t) {
            if (other.coeffs_[t] == 0) continue;
            unsigned u = s + t;
            if (u >= order_) u -= order_;
            z.coeffs_[u] += coeffs_[s] * other.coeffs_[t];
        }
    }
    return z;
}

CycInt CycInt::scaled(const BigInt& c) const {
    CycInt z(order_);
    for (unsigned t = 0; t < order_; ++t) z.coeffs_[t] = coeffs_[t] * c;
    return z;
}

CycInt CycInt::conj() const {
    CycInt z(order_);
    z.coeffs_[0] = coeffs_[0];
    for (unsigned t = 1; t < order_; ++t) z.coeffs_[order_ - t] = coeffs_[t];
    return z;
}

CycInt CycInt::pow(unsigned e) const {
    CycInt result = CycInt::integer(order_, 1);
    CycInt base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;  // final squaring is wasted when e becomes 1; harmless
        e >>= 1u;
    }
    return result;
}

CycInt CycInt::embed(unsigned new_order) const {
    if (new_order == 0 || new_order % order_ != 0)
        throw std::invalid_argument("CycInt::embed: target order must be a positive multiple");
    const unsigned stride = new_order / order_;
    CycInt z(new_order);
    for (unsigned t = 0; t < order_; ++t) z.coeffs_[t * stride] = coeffs_[t];
    return z;
}

bool CycInt::is_zero() const {
    bool trivially_zero = true;
    for (const BigInt& c : coeffs_) {
        if (c != 0) {
            trivially_zero = false;
            break;
        }
    }
    if (trivially_zero) return true;
    IntPoly p(coeffs_);
    return p.remainder_by_monic(cyclotomic_polynomial(order_)).is_zero();
}

bool CycInt::equals(const CycInt& other) const {
    return (*this - other).is_zero();
}

bool CycInt::equals(const BigInt& v) const {
    CycInt d = *this;
    d.coeffs_[0] -= v;
    return d.is_zero();
}

std::optional<unsigned> CycInt::as_root_of_unity() const {
    for (unsigned t = 0; t < order_; ++t) {
        CycInt d = *this;
        d.coeffs_[t] -= 1;
        if (d.is_zero()) return t;
    }
    return std::nullopt;
}

std::complex<double> CycInt::eval() const {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
    std::complex<double> acc{0.0, 0.0};
    for (unsigned t = 0; t < order_; ++t) {
        if (coeffs_[t] == 0) continue;
        const double c = coeffs_[t].convert_to<double>();
        acc += std::complex<double>(c * std::cos(step * t), c * std::sin(step * t));
    }
    return acc;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned t = 0; t < order_; ++t) {
        const BigInt& c = coeffs_[t];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        BigInt a = abs(c);
        if (a != 1 || t == 0) os << a.str();
        if (t > 0) {
            if (a != 1) os << "*";
            os << "z" << order_;
            if (t > 1) os << "^" << t;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace butson
