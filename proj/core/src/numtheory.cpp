#include "butson/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace butson {

unsigned totient(unsigned n) {
    if (n == 0) throw std::invalid_argument("totient: n must be positive");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; static_cast<std::uint64_t>(p) * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<unsigned> small, large;
    for (unsigned d = 1; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm_checked: arguments must be positive");
    std::uint64_t g = a;
    std::uint64_t r = b;
    while (r != 0) {
        std::uint64_t t = g % r;
        g = r;
        r = t;
    }
    std::uint64_t q = a / g;
    if (q > std::numeric_limits<std::uint64_t>::max() / b)
        throw std::overflow_error("lcm_checked: result does not fit 64 bits");
    return q * b;
}

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = p * p; q <= n; q += p) sieve[q] = false;
    }
    return primes;
}

void search_totient_products(const std::vector<std::uint64_t>& primes, std::size_t idx,
                             std::uint64_t value, std::uint64_t phi, std::uint64_t bound,
                             std::uint64_t& best) {
    best = std::max(best, value);
    for (std::size_t i = idx; i < primes.size(); ++i) {
        std::uint64_t p = primes[i];
        if (phi > bound / (p - 1)) break;  // primes ascending, all later ones overflow too
        std::uint64_t v = value * p;
        std::uint64_t f = phi * (p - 1);
        while (f <= bound) {
            search_totient_products(primes, i + 1, v, f, bound, best);
            if (f > bound / p || v > std::numeric_limits<std::uint64_t>::max() / p) break;
            f *= p;
            v *= p;
        }
    }
}

}  // namespace

std::uint64_t max_order_with_totient_at_most(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("max_order_with_totient_at_most: bound must be positive");
    auto primes = primes_up_to(bound + 1);
    std::uint64_t best = 1;
    search_totient_products(primes, 0, 1, 1, bound, best);
    return best;
}

std::vector<Convergent> convergents(double theta, std::uint64_t max_den) {
    if (!(theta >= 0.0 && theta < 1.0))
        throw std::invalid_argument("convergents: theta must lie in [0, 1)");
    std::vector<Convergent> out;
    // p_k = a_k p_{k-1} + p_{k-2}, q_k likewise.
    std::uint64_t p_prev = 1, q_prev = 0;  // k = -1
    std::uint64_t p = 0, q = 1;            // k = 0 with a_0 = floor(theta) = 0
    out.push_back({p, q});
    double x = theta;
    for (int k = 0; k < 64; ++k) {
        if (x < 1e-15) break;  // expansion terminated
        x = 1.0 / x;
        if (x > 9.0e18) break;
        auto a = static_cast<std::uint64_t>(std::floor(x));
        x -= std::floor(x);
        if (a == 0) break;
        if (q > (std::numeric_limits<std::uint64_t>::max() - q_prev) / a) break;
        std::uint64_t p_next = a * p + p_prev;
        std::uint64_t q_next = a * q + q_prev;
        if (q_next > max_den) break;
        out.push_back({p_next, q_next});
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    return out;
}

}  // namespace butson
