#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace butson {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchConfig {
    unsigned m = 0;
    unsigned l = 0;
    bool dedup = false;
    /// Half-open rank interval [lo, hi) within [0, l^m); absent means the
    /// full space.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
    std::uint64_t checkpoint_every = 1024;
};

struct SearchOptions {
    unsigned workers = 1;
    /// When set, progress is checkpointed here and an existing compatible
    /// checkpoint is resumed (only not-yet-scanned ranks are processed).
    std::filesystem::path checkpoint_path;
};

struct Counterexample {
    std::vector<unsigned> first_row;
    unsigned k = 0;
    unsigned counterexample_i = 0;
    bool operator==(const Counterexample&) const = default;
};

struct SearchReport {
    std::uint64_t scanned = 0;
    std::uint64_t bh_count = 0;
    std::uint64_t tested = 0;
    std::uint64_t holds_count = 0;
    std::uint64_t counterexample_count = 0;
    std::uint64_t no_common_k_count = 0;
    std::vector<Counterexample> counterexamples;  ///< in first-row rank order
    bool operator==(const SearchReport&) const = default;
};

/// Circulant Butson test straight from the first row: every nontrivial
/// periodic autocorrelation sum_j zeta_l^(a_j - a_(j+s)) must vanish exactly.
/// Equivalent to verify_bh(circulant(l, row)) without building the matrix.
bool autocorrelation_is_bh(unsigned l, std::span<const unsigned> row);

/// Lexicographic rank of a row (leftmost digit most significant, base l).
std::uint64_t row_rank(unsigned l, std::span<const unsigned> row);
std::vector<unsigned> row_from_rank(unsigned l, unsigned m, std::uint64_t rank);

/// Rank of the lexicographically least element of the orbit of `row` under
/// cyclic rotations and global exponent shifts a_j -> a_j + c (mod l). Both
/// symmetries preserve BH membership and scaled-power entry multisets.
std::uint64_t canonical_rank(unsigned l, std::span<const unsigned> row);

/// Hash pinning (m, l, dedup, resolved range); checkpoints refuse to resume
/// across different values.
std::uint64_t config_hash(const SearchConfig& cfg);

struct CheckpointShard {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t next = 0;
    bool operator==(const CheckpointShard&) const = default;
};

struct Checkpoint {
    std::uint64_t cfg_hash = 0;
    std::vector<CheckpointShard> shards;
    bool operator==(const Checkpoint&) const = default;
};

Checkpoint read_checkpoint(const std::filesystem::path& path);
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);

/// Exhaustive scan of circulant first rows. The report is a deterministic
/// function of the configuration (and checkpoint state): results merge in
/// rank order no matter how many workers run.
SearchReport run_search(const SearchConfig& cfg, const SearchOptions& opts = {});

/// Concatenate reports of consecutive rank ranges.
SearchReport merge_reports(SearchReport a, const SearchReport& b);

}  // namespace butson
