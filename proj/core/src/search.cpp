#include "butson/search.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <string_view>
#include <thread>

#include "butson/conjecture.hpp"
#include "butson/cyclotomic.hpp"
#include "butson/matrices.hpp"
#include "butson/spectra.hpp"

namespace butson {

bool autocorrelation_is_bh(unsigned l, std::span<const unsigned> row) {
    const auto m = static_cast<unsigned>(row.size());
    if (m == 0) throw std::invalid_argument("autocorrelation_is_bh: empty row");
    for (unsigned e : row) {
        if (e >= l) throw std::invalid_argument("autocorrelation_is_bh: exponent out of range");
    }
    std::vector<BigInt> counts(l);
    for (unsigned s = 1; s < m; ++s) {
        for (auto& c : counts) c = 0;
        for (unsigned j = 0; j < m; ++j) {
            unsigned d = row[j] + l - row[(j + s) % m];
            if (d >= l) d -= l;
            counts[d] += 1;
        }
        if (!CycInt(l, counts).is_zero()) return false;
    }
    return true;
}

std::uint64_t row_rank(unsigned l, std::span<const unsigned> row) {
    std::uint64_t rank = 0;
    for (unsigned e : row) rank = rank * l + e;
    return rank;
}

std::vector<unsigned> row_from_rank(unsigned l, unsigned m, std::uint64_t rank) {
    std::vector<unsigned> row(m);
    for (unsigned j = m; j-- > 0;) {
        row[j] = static_cast<unsigned>(rank % l);
        rank /= l;
    }
    return row;
}

std::uint64_t canonical_rank(unsigned l, std::span<const unsigned> row) {
    const auto m = static_cast<unsigned>(row.size());
    std::uint64_t best = row_rank(l, row);
    for (unsigned r = 0; r < m; ++r) {
        for (unsigned c = 0; c < l; ++c) {
            std::uint64_t rank = 0;
            for (unsigned j = 0; j < m; ++j) {
                unsigned e = row[(j + r) % m] + c;
                if (e >= l) e -= l;
                rank = rank * l + e;
            }
            best = std::min(best, rank);
        }
    }
    return best;
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = kFnvOffset) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= kFnvPrime;
    }
    return h;
}

// l^m, or absent when it does not fit 64 bits.
std::optional<std::uint64_t> space_size(unsigned l, unsigned m) {
    std::uint64_t total = 1;
    for (unsigned j = 0; j < m; ++j) {
        if (l != 0 && total > std::numeric_limits<std::uint64_t>::max() / l) return std::nullopt;
        total *= l;
    }
    return total;
}

std::pair<std::uint64_t, std::uint64_t> resolve_range(const SearchConfig& cfg) {
    const auto total = space_size(cfg.l, cfg.m);
    if (!total && !cfg.range)
        throw ConfigError("search space l^m exceeds 64-bit ranks; an explicit range is required");
    if (!total && cfg.dedup)
        throw ConfigError("dedup needs full-orbit ranks, which exceed 64 bits for this (m, l)");
    auto range = cfg.range.value_or(std::make_pair(std::uint64_t(0), *total));
    if (range.first > range.second) throw ConfigError("range lower bound exceeds upper bound");
    if (total && range.second > *total)
        throw ConfigError("range upper bound exceeds the number of rows l^m");
    return range;
}

}  // namespace

std::uint64_t config_hash(const SearchConfig& cfg) {
    const auto range = resolve_range(cfg);
    std::ostringstream os;
    os << "butson-search m=" << cfg.m << " l=" << cfg.l << " dedup=" << (cfg.dedup ? 1 : 0)
       << " range=" << range.first << ".." << range.second;
    return fnv1a(os.str());
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CheckpointError("cannot open checkpoint file: " + path.string());
    Checkpoint cp;
    std::string magic;
    if (!(in >> magic >> cp.cfg_hash) || magic != "butson-search-v1")
        throw CheckpointError("malformed checkpoint header in " + path.string());
    std::string word;
    while (in >> word) {
        if (word != "shard") throw CheckpointError("malformed checkpoint line in " + path.string());
        CheckpointShard s;
        if (!(in >> s.lo >> s.hi >> s.next) || s.lo > s.next || s.next > s.hi)
            throw CheckpointError("malformed shard bounds in " + path.string());
        cp.shards.push_back(s);
    }
    if (cp.shards.empty()) throw CheckpointError("checkpoint has no shards: " + path.string());
    return cp;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CheckpointError("cannot write checkpoint file: " + tmp.string());
        out << "butson-search-v1 " << cp.cfg_hash << "\n";
        for (const auto& s : cp.shards) out << "shard " << s.lo << " " << s.hi << " " << s.next << "\n";
        out.flush();
        if (!out) throw CheckpointError("cannot write checkpoint file: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CheckpointError("cannot replace checkpoint file: " + path.string());
}

SearchReport merge_reports(SearchReport a, const SearchReport& b) {
    a.scanned += b.scanned;
    a.bh_count += b.bh_count;
    a.tested += b.tested;
    a.holds_count += b.holds_count;
    a.counterexample_count += b.counterexample_count;
    a.no_common_k_count += b.no_common_k_count;
    a.counterexamples.insert(a.counterexamples.end(), b.counterexamples.begin(),
                             b.counterexamples.end());
    return a;
}

namespace {

// Scan one contiguous rank interval; `on_progress(next)` fires every
// `checkpoint_every` rows and must be cheap and thread-safe.
template <typename Progress>
SearchReport scan_interval(const SearchConfig& cfg, std::uint64_t lo, std::uint64_t hi,
                           Progress&& on_progress) {
    SearchReport report;
    if (lo >= hi) return report;
    std::vector<unsigned> row = row_from_rank(cfg.l, cfg.m, lo);
    std::uint64_t since_checkpoint = 0;
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        if (rank != lo) {
            // Odometer increment in base l, most significant digit first.
            for (unsigned j = cfg.m; j-- > 0;) {
                if (++row[j] < cfg.l) break;
                row[j] = 0;
            }
        }
        report.scanned += 1;
        const bool process = !cfg.dedup || canonical_rank(cfg.l, row) == rank;
        if (process && autocorrelation_is_bh(cfg.l, row)) {
            report.bh_count += 1;
            report.tested += 1;
            const RootMatrix M = RootMatrix::circulant(cfg.l, row);
            const SpectrumReport spectrum = spectrum_report(M);
            if (!spectrum.common_k) {
                report.no_common_k_count += 1;
            } else {
                const ConjectureVerdict verdict = conjecture_test(M, *spectrum.common_k);
                if (verdict.holds) {
                    report.holds_count += 1;
                } else {
                    report.counterexample_count += 1;
                    report.counterexamples.push_back(
                        Counterexample{row, verdict.k, *verdict.counterexample_i});
                }
            }
        }
        if (++since_checkpoint >= cfg.checkpoint_every) {
            since_checkpoint = 0;
            on_progress(rank + 1);
        }
    }
    return report;
}

}  // namespace

SearchReport run_search(const SearchConfig& cfg, const SearchOptions& opts) {
    if (cfg.m == 0 || cfg.l == 0) throw ConfigError("search needs positive m and l");
    if (cfg.checkpoint_every == 0) throw ConfigError("checkpoint_every must be positive");
    const auto [lo, hi] = resolve_range(cfg);
    const std::uint64_t hash = config_hash(cfg);
    const unsigned workers = std::max(1u, opts.workers);

    // Shard layout comes from a resumable checkpoint when one exists;
    // otherwise the range splits into `workers` contiguous pieces.
    Checkpoint cp;
    cp.cfg_hash = hash;
    const bool use_checkpoint = !opts.checkpoint_path.empty();
    if (use_checkpoint && std::filesystem::exists(opts.checkpoint_path)) {
        cp = read_checkpoint(opts.checkpoint_path);
        if (cp.cfg_hash != hash)
            throw CheckpointError("checkpoint belongs to a different search configuration");
    } else {
        const std::uint64_t span = hi - lo;
        const auto n = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(span, 1));
        for (std::uint64_t w = 0; w < n; ++w) {
            CheckpointShard s;
            s.lo = lo + span * w / n;
            s.hi = lo + span * (w + 1) / n;
            s.next = s.lo;
            cp.shards.push_back(s);
        }
        if (use_checkpoint) write_checkpoint(opts.checkpoint_path, cp);
    }

    std::mutex cp_mutex;  // guards cp and the checkpoint file
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<SearchReport> results(cp.shards.size());

    auto scan_shard = [&](std::size_t idx) {
        const CheckpointShard shard = cp.shards[idx];
        try {
            results[idx] = scan_interval(cfg, shard.next, shard.hi, [&](std::uint64_t next) {
                if (!use_checkpoint) return;
                std::lock_guard lock(cp_mutex);
                cp.shards[idx].next = next;
                write_checkpoint(opts.checkpoint_path, cp);
            });
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (cp.shards.size() <= 1 || workers <= 1) {
        for (std::size_t i = 0; i < cp.shards.size(); ++i) scan_shard(i);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(cp.shards.size());
        for (std::size_t i = 0; i < cp.shards.size(); ++i) threads.emplace_back(scan_shard, i);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    if (use_checkpoint) {
        std::lock_guard lock(cp_mutex);
        for (auto& s : cp.shards) s.next = s.hi;
        write_checkpoint(opts.checkpoint_path, cp);
    }

    SearchReport merged;
    for (auto& r : results) merged = merge_reports(std::move(merged), r);
    return merged;
}

}  // namespace butson
