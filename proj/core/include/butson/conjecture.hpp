#pragma once

#include <map>
#include <optional>
#include <vector>

#include "butson/matrices.hpp"
#include "butson/spectra.hpp"

namespace butson {

/// A root of unity zeta_order^exponent in lowest terms (order minimal).
struct RootExponent {
    unsigned order;
    unsigned exponent;
    auto operator<=>(const RootExponent&) const = default;
};

/// Classification of one entry of the scaled power sqrt(m)^(1-i) M^i.
struct EntryClass {
    unsigned row = 0;
    unsigned col = 0;
    /// Present when the entry equals sqrt(m)^(i-1) * zeta_root exactly, with
    /// the minimal root order; absent when no candidate order matches.
    std::optional<RootExponent> root;
    bool in_mu_l = false;  ///< root present and its order divides l
    bool in_mu_k = false;  ///< root present and its order divides k
};

struct EntrySummary {
    std::vector<RootExponent> distinct_roots;  ///< sorted, deduplicated
    unsigned unclassified = 0;
};

struct PerIVerdict {
    bool all_in_mu_l = false;
    bool all_in_mu_k = false;
    EntrySummary summary;
};

struct ConjectureVerdict {
    unsigned k = 0;
    std::map<unsigned, PerIVerdict> per_i;  ///< keys: i in [1, k] coprime to k
    bool holds = false;                     ///< every tested i stayed inside mu_l
    std::optional<unsigned> counterexample_i;
};

/// Thrown when the conjecture test's spectrum precondition fails.
class NoCommonOrderError : public std::runtime_error {
public:
    explicit NoCommonOrderError(SpectrumFailure f)
        : std::runtime_error(std::string("no common eigenvalue order: ") + to_string(f)),
          failure_(f) {}
    SpectrumFailure failure() const noexcept { return failure_; }

private:
    SpectrumFailure failure_;
};

/// Classify every entry of the exact power M^i against scaled roots of unity.
/// Candidate orders are the divisors of lcm(2l, 2k, 2m) in increasing order,
/// so the reported root order is minimal. Requires verify_bh(M) and i >= 1.
std::vector<EntryClass> classify_scaled_power(const RootMatrix& M, unsigned i, unsigned k);

/// Test every i in [1, k] coprime to k (power verdicts repeat with period k
/// because B^k = I). Throws NoCommonOrderError when the spectrum has no
/// common order.
ConjectureVerdict conjecture_test(const RootMatrix& M);
/// Same, with the common order k already established by the caller.
ConjectureVerdict conjecture_test(const RootMatrix& M, unsigned k);

/// The three matrices bundled with the CLI as ex1 / ex2 / ex3.
struct BuiltinExamples {
    RootMatrix ex1;  ///< BH(2,4), spectrum order 24
    RootMatrix ex2;  ///< circulant BH(5,5), the conjecture counterexample
    RootMatrix ex3;  ///< BH(4,2) with constant diagonal, spectrum order 3
};
BuiltinExamples builtin_examples();

}  // namespace butson
