#pragma once

#include <cstdint>
#include <vector>

namespace butson {

/// Euler's totient of n (n >= 1).
unsigned totient(unsigned n);

/// All positive divisors of n in increasing order (n >= 1).
std::vector<unsigned> divisors(unsigned n);

/// Least common multiple with overflow check; throws std::overflow_error.
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

/// Largest q with totient(q) <= bound. Enumerates products of prime powers
/// whose totient stays within the bound, so it needs no sieve of size ~bound^2.
std::uint64_t max_order_with_totient_at_most(std::uint64_t bound);

struct Convergent {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

/// Continued-fraction convergents p/q of theta in [0, 1), in increasing
/// denominator order, stopping once the denominator would exceed max_den.
/// Every convergent is in lowest terms.
std::vector<Convergent> convergents(double theta, std::uint64_t max_den);

}  // namespace butson
