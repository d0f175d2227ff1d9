#include "butson/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "butson/numtheory.hpp"
#include "eig_qr.hpp"

namespace butson {

const char* to_string(SpectrumFailure f) {
    switch (f) {
        case SpectrumFailure::non_root_eigenvalue: return "non-root eigenvalue found";
        case SpectrumFailure::mixed_orders: return "mixed orders";
        case SpectrumFailure::order_bound_exceeded: return "order bound exceeded";
    }
    return "unknown";
}

namespace detail {

std::uint64_t exact_order_bound(unsigned m, unsigned l) {
    const std::uint64_t L = lcm_checked(l, m);
    return lcm_checked(lcm_checked(2, L), 4ull * m);
}

std::uint64_t numeric_order_bound(unsigned m, unsigned l) {
    const std::uint64_t degree = 2ull * m * totient(l);
    std::uint64_t q = max_order_with_totient_at_most(degree);
    // The field-containment bound for circulants is also always safe to include.
    const std::uint64_t L = lcm_checked(l, m);
    return std::max(q, lcm_checked(lcm_checked(2, L), 4ull * m));
}

double principal_angle(std::complex<double> z) {
    double a = std::arg(z);
    const double two_pi = 2.0 * std::numbers::pi;
    if (a < 0.0) a += two_pi;
    if (a >= two_pi - 1e-9) a = 0.0;
    return a;
}

}  // namespace detail

namespace {

std::complex<double> complex_pow(std::complex<double> base, std::uint64_t e) {
    std::complex<double> result(1.0, 0.0);
    while (e > 0) {
        if (e & 1ull) result *= base;
        base *= base;
        e >>= 1ull;
    }
    return result;
}

}  // namespace

std::vector<CycInt> circulant_eigenvalues_exact(const RootMatrix& M) {
    if (!is_circulant(M))
        throw std::invalid_argument("circulant_eigenvalues_exact: matrix is not circulant");
    const unsigned m = M.dim();
    const unsigned l = M.root_order();
    const auto L64 = lcm_checked(l, m);
    if (L64 > 0xffffffffull)
        throw std::invalid_argument("circulant_eigenvalues_exact: lcm(l, m) too large");
    const auto L = static_cast<unsigned>(L64);
    const unsigned fl = L / l, fm = L / m;
    const auto row = M.first_row();
    std::vector<CycInt> out;
    out.reserve(m);
    for (unsigned j = 0; j < m; ++j) {
        std::vector<BigInt> coeffs(L);
        for (unsigned s = 0; s < m; ++s) {
            const std::uint64_t freq = (std::uint64_t(j) * s) % m;
            const std::uint64_t e = (std::uint64_t(row[s]) * fl + freq * fm) % L;
            coeffs[static_cast<std::size_t>(e)] += 1;
        }
        out.emplace_back(L, std::move(coeffs));
    }
    return out;
}

std::vector<std::complex<double>> eig_numeric(const RootMatrix& M) {
    const unsigned m = M.dim();
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    const double step = 2.0 * std::numbers::pi / M.root_order();
    std::vector<std::complex<double>> b(std::size_t(m) * m);
    double bnorm = 0.0;
    for (unsigned j = 0; j < m; ++j) {
        for (unsigned k = 0; k < m; ++k) {
            const double t = step * M.exp_at(j, k);
            b[std::size_t(j) * m + k] = {inv_sqrt_m * std::cos(t), inv_sqrt_m * std::sin(t)};
            bnorm += std::norm(b[std::size_t(j) * m + k]);
        }
    }
    bnorm = std::sqrt(bnorm);

    auto sol = detail::schur_eigen(b, m, 100u * m);

    // Residual check ||B v - lambda v|| <= 1e-9 ||B|| per eigenpair.
    for (unsigned j = 0; j < m; ++j) {
        double res2 = 0.0;
        for (unsigned r = 0; r < m; ++r) {
            std::complex<double> s(0.0, 0.0);
            for (unsigned c = 0; c < m; ++c) s += b[std::size_t(r) * m + c] * sol.vectors[j][c];
            s -= sol.values[j] * sol.vectors[j][r];
            res2 += std::norm(s);
        }
        if (std::sqrt(res2) > 1e-9 * bnorm)
            throw NumericFailure(j, "eigenpair residual above tolerance at index " +
                                        std::to_string(j));
    }

    std::sort(sol.values.begin(), sol.values.end(),
              [](const std::complex<double>& x, const std::complex<double>& y) {
                  const double ax = detail::principal_angle(x), ay = detail::principal_angle(y);
                  if (ax != ay) return ax < ay;
                  return std::abs(x) < std::abs(y);
              });
    return sol.values;
}

std::optional<unsigned> order_exact(const CycInt& h, unsigned m, std::uint64_t bound) {
    if (!(h * h.conj()).equals(BigInt(m)))
        throw std::invalid_argument("order_exact: h * conj(h) must equal m");
    if (bound == 0 || bound > 0xffffffffull)
        throw std::invalid_argument("order_exact: bound out of range");
    const std::complex<double> lambda = h.eval() / std::sqrt(static_cast<double>(m));
    for (unsigned d : divisors(static_cast<unsigned>(bound))) {
        if (d % 2 == 0) {
            // lambda^d = 1  <=>  h^d = m^(d/2), an identity inside Z[zeta].
            if (h.pow(d).equals(pow(BigInt(m), d / 2))) return d;
        } else {
            // h^(2d) = m^d forces lambda^d = +-1; the sign candidates are two
            // apart, so floating point resolves it with overwhelming margin.
            if (h.pow(2 * d).equals(pow(BigInt(m), d)) && complex_pow(lambda, d).real() > 0.0)
                return d;
        }
    }
    return std::nullopt;
}

std::optional<unsigned> order_numeric(std::complex<double> lambda, std::uint64_t q_max,
                                      double eps) {
    const double two_pi = 2.0 * std::numbers::pi;
    double theta = std::arg(lambda) / two_pi;
    theta -= std::floor(theta);
    if (theta >= 1.0) theta = 0.0;
    for (const auto& c : convergents(theta, q_max)) {
        if (c.den > 0xffffffffull) break;
        if (std::abs(complex_pow(lambda, c.den) - std::complex<double>(1.0, 0.0)) < eps)
            return static_cast<unsigned>(c.den);
    }
    // theta close to 1 from below approximates the angle 0 = 1/1.
    if (std::abs(lambda - std::complex<double>(1.0, 0.0)) < eps) return 1u;
    return std::nullopt;
}

SpectrumReport spectrum_report(const RootMatrix& M) {
    if (!verify_bh(M).is_bh)
        throw std::invalid_argument("spectrum_report: matrix is not Butson-Hadamard");
    const unsigned m = M.dim();
    const double sqrt_m = std::sqrt(static_cast<double>(m));

    SpectrumReport report;
    if (is_circulant(M)) {
        report.exact_path = true;
        report.order_bound = detail::exact_order_bound(m, M.root_order());
        for (auto& h : circulant_eigenvalues_exact(M)) {
            EigenFinding f;
            f.value = h.eval() / sqrt_m;
            f.order = order_exact(h, m, report.order_bound);
            f.primitive = f.order.has_value();
            f.exact_h = std::move(h);
            report.findings.push_back(std::move(f));
        }
    } else {
        report.exact_path = false;
        report.order_bound = detail::numeric_order_bound(m, M.root_order());
        for (auto lambda : eig_numeric(M)) {
            EigenFinding f;
            f.value = lambda;
            f.order = order_numeric(lambda, report.order_bound);
            f.primitive = f.order.has_value();
            report.findings.push_back(std::move(f));
        }
    }

    std::sort(report.findings.begin(), report.findings.end(),
              [](const EigenFinding& x, const EigenFinding& y) {
                  const double ax = detail::principal_angle(x.value);
                  const double ay = detail::principal_angle(y.value);
                  if (ax != ay) return ax < ay;
                  return std::abs(x.value) < std::abs(y.value);
              });

    bool all_orders = true;
    for (const auto& f : report.findings) all_orders = all_orders && f.order.has_value();
    if (!all_orders) {
        report.failure = report.exact_path ? SpectrumFailure::non_root_eigenvalue
                                           : SpectrumFailure::order_bound_exceeded;
        return report;
    }
    const unsigned k0 = *report.findings.front().order;
    for (const auto& f : report.findings) {
        if (*f.order != k0) {
            report.failure = SpectrumFailure::mixed_orders;
            return report;
        }
    }
    report.common_k = k0;
    return report;
}

}  // namespace butson
