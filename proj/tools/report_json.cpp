#include "report_json.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace butson::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex16(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

namespace {

Json cycint_json(const CycInt& v) {
    Json coeffs = Json::array();
    for (const BigInt& c : v.coeffs()) coeffs.push_back(c.str());
    return Json{{"order", v.order()}, {"coeffs", std::move(coeffs)}};
}

Json root_exponent_json(const RootExponent& r) {
    return Json{{"order", r.order}, {"exp", r.exponent}};
}

std::string root_exponent_str(const RootExponent& r) {
    if (r.order == 1) return "1";
    std::ostringstream os;
    os << "z" << r.order;
    if (r.exponent != 1) os << "^" << r.exponent;
    return os.str();
}

}  // namespace

Json matrix_input(const std::string& source, const RootMatrix& M) {
    return Json{{"source", source},
                {"m", M.dim()},
                {"l", M.root_order()},
                {"hash", hex16(fnv1a64(format_matrix(M)))}};
}

Json verification_json(const VerificationView& v) {
    Json j{{"type", "verification"},
           {"is_bh", v.check.is_bh},
           {"symmetric", v.symmetric},
           {"circulant", v.circulant},
           {"unreal", v.unreal},
           {"violation", nullptr}};
    if (v.check.violation) {
        j["violation"] = Json{{"row", v.check.violation->row},
                              {"col", v.check.violation->col},
                              {"value", cycint_json(v.check.violation->value)}};
    }
    return j;
}

std::optional<std::pair<unsigned, unsigned>> angle_fraction_of(const EigenFinding& f) {
    if (!f.order) return std::nullopt;
    const unsigned k = *f.order;
    double a = std::arg(f.value) / (2.0 * std::numbers::pi);
    a -= std::floor(a);
    const auto t = static_cast<unsigned>(std::llround(a * k) % k);
    return std::make_pair(t, k);
}

Json spectrum_json(const SpectrumReport& rep) {
    Json findings = Json::array();
    for (const auto& f : rep.findings) {
        Json jf{{"re", f.value.real()},
                {"im", f.value.imag()},
                {"order", nullptr},
                {"primitive", f.primitive},
                {"angle", nullptr},
                {"h", nullptr}};
        if (f.order) jf["order"] = *f.order;
        if (auto frac = angle_fraction_of(f))
            jf["angle"] = Json{{"num", frac->first}, {"den", frac->second}};
        if (f.exact_h) jf["h"] = cycint_json(*f.exact_h);
        findings.push_back(std::move(jf));
    }
    Json j{{"type", "spectrum"},
           {"exact", rep.exact_path},
           {"order_bound", rep.order_bound},
           {"findings", std::move(findings)},
           {"common_k", nullptr},
           {"failure", nullptr}};
    if (rep.common_k) j["common_k"] = *rep.common_k;
    if (rep.failure) j["failure"] = to_string(*rep.failure);
    return j;
}

Json conjecture_json(const ConjectureVerdict& verdict) {
    Json per_i = Json::array();
    for (const auto& [i, v] : verdict.per_i) {
        Json values = Json::array();
        for (const auto& r : v.summary.distinct_roots) values.push_back(root_exponent_json(r));
        per_i.push_back(Json{{"i", i},
                             {"all_in_mu_l", v.all_in_mu_l},
                             {"all_in_mu_k", v.all_in_mu_k},
                             {"values", std::move(values)},
                             {"unclassified", v.summary.unclassified}});
    }
    Json j{{"type", "conjecture"},
           {"k", verdict.k},
           {"per_i", std::move(per_i)},
           {"holds", verdict.holds},
           {"counterexample_i", nullptr}};
    if (verdict.counterexample_i) j["counterexample_i"] = *verdict.counterexample_i;
    return j;
}

Json search_json(const SearchReport& rep) {
    Json list = Json::array();
    for (const auto& ce : rep.counterexamples) {
        list.push_back(Json{{"first_row", ce.first_row}, {"k", ce.k}, {"i", ce.counterexample_i}});
    }
    return Json{{"type", "search"},
                {"scanned", rep.scanned},
                {"bh_count", rep.bh_count},
                {"tested", rep.tested},
                {"holds_count", rep.holds_count},
                {"counterexample_count", rep.counterexample_count},
                {"no_common_k_count", rep.no_common_k_count},
                {"counterexamples", std::move(list)}};
}

Json run_report(const std::string& command, Json input, Json result, std::int64_t elapsed_ms) {
    return Json{{"command", command},
                {"input", std::move(input)},
                {"result", std::move(result)},
                {"elapsed_ms", elapsed_ms}};
}

// ---------------------------------------------------------------------------
// Human-readable output

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_header(std::ostream& os, const std::string& source, const RootMatrix& M) {
    os << "input: " << source << "  (m=" << M.dim() << ", l=" << M.root_order() << ")\n";
}

}  // namespace

void print_verification(std::ostream& os, const std::string& source, const RootMatrix& M,
                        const VerificationView& v) {
    print_header(os, source, M);
    if (v.check.is_bh) {
        os << "bh: yes\n";
    } else {
        os << "bh: no";
        if (v.check.violation) {
            os << "  (Gram cell (" << v.check.violation->row << "," << v.check.violation->col
               << ") = " << v.check.violation->value.str() << ")";
        }
        os << "\n";
    }
    os << "symmetric: " << yes_no(v.symmetric) << "\n";
    os << "circulant: " << yes_no(v.circulant) << "\n";
    os << "unreal: " << yes_no(v.unreal) << "\n";
}

void print_spectrum(std::ostream& os, const std::string& source, const RootMatrix& M,
                    const SpectrumReport& rep) {
    print_header(os, source, M);
    os << "path: " << (rep.exact_path ? "exact (circulant)" : "numeric") << "\n";
    os << "eigenvalues of M/sqrt(m):\n";
    for (const auto& f : rep.findings) {
        os << "  ";
        if (auto frac = angle_fraction_of(f)) {
            os << "angle " << frac->first << "/" << frac->second << " of 2pi";
        } else {
            os << "angle (no exact order)";
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "  (%.9f%+.9fi)", f.value.real(), f.value.imag());
        os << buf;
        if (f.order) os << "  order " << *f.order << (f.primitive ? "  primitive" : "");
        else os << "  order not found (bound " << rep.order_bound << ")";
        os << "\n";
    }
    if (rep.common_k) os << "common k: " << *rep.common_k << "\n";
    else os << "common k: none (" << to_string(*rep.failure) << ")\n";
}

void print_conjecture(std::ostream& os, const std::string& source, const RootMatrix& M,
                      const ConjectureVerdict& verdict) {
    print_header(os, source, M);
    os << "k = " << verdict.k << "; testing i in [1, " << verdict.k << "] coprime to k\n";
    for (const auto& [i, v] : verdict.per_i) {
        os << "  i=" << i << ": in mu_l " << (v.all_in_mu_l ? "yes" : "NO") << ", in mu_k "
           << (v.all_in_mu_k ? "yes" : "no") << ", values:";
        for (const auto& r : v.summary.distinct_roots) os << " " << root_exponent_str(r);
        if (v.summary.unclassified > 0) os << " (+" << v.summary.unclassified << " unclassified)";
        os << "\n";
    }
    if (verdict.holds) os << "conjecture holds for this matrix\n";
    else os << "counterexample: i = " << *verdict.counterexample_i << "\n";
}

void print_search(std::ostream& os, const SearchConfig& cfg, const SearchReport& rep) {
    os << "search m=" << cfg.m << " l=" << cfg.l << (cfg.dedup ? " (dedup)" : "") << "\n";
    os << "scanned " << rep.scanned << " rows, " << rep.bh_count << " Butson circulants, "
       << rep.tested << " tested\n";
    os << "holds: " << rep.holds_count << "  counterexamples: " << rep.counterexample_count
       << "  no common k: " << rep.no_common_k_count << "\n";
    if (!rep.counterexamples.empty()) {
        os << "counterexample rows:\n";
        for (const auto& ce : rep.counterexamples) {
            os << "  (";
            for (std::size_t j = 0; j < ce.first_row.size(); ++j) {
                if (j) os << ",";
                os << ce.first_row[j];
            }
            os << ")  k=" << ce.k << "  i=" << ce.counterexample_i << "\n";
        }
    }
}

}  // namespace butson::cli
