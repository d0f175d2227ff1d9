#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "butson/conjecture.hpp"
#include "butson/matrices.hpp"
#include "butson/search.hpp"
#include "butson/spectra.hpp"

// JSON and human-readable rendering of library reports. Field order is fixed
// so serialized output is byte-stable; nlohmann::ordered_json preserves it.

namespace butson::cli {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex16(std::uint64_t value);

/// Matrix fingerprint: dimensions plus a content hash of the canonical
/// serialization.
Json matrix_input(const std::string& source, const RootMatrix& M);

struct VerificationView {
    BhVerification check;
    bool symmetric = false;
    bool circulant = false;
    bool unreal = false;
};

Json verification_json(const VerificationView& v);
Json spectrum_json(const SpectrumReport& rep);
Json conjecture_json(const ConjectureVerdict& verdict);
Json search_json(const SearchReport& rep);

Json run_report(const std::string& command, Json input, Json result, std::int64_t elapsed_ms);

/// Reduced fraction of a full turn for a finding with a known order.
std::optional<std::pair<unsigned, unsigned>> angle_fraction_of(const EigenFinding& f);

void print_verification(std::ostream& os, const std::string& source, const RootMatrix& M,
                        const VerificationView& v);
void print_spectrum(std::ostream& os, const std::string& source, const RootMatrix& M,
                    const SpectrumReport& rep);
void print_conjecture(std::ostream& os, const std::string& source, const RootMatrix& M,
                      const ConjectureVerdict& verdict);
void print_search(std::ostream& os, const SearchConfig& cfg, const SearchReport& rep);

}  // namespace butson::cli
