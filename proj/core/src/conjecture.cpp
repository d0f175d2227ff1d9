#include "butson/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "butson/numtheory.hpp"

namespace butson {

namespace {

// Fractional angle of z in [0, 1).
double angle_fraction(std::complex<double> z) {
    double a = std::arg(z) / (2.0 * std::numbers::pi);
    a -= std::floor(a);
    if (a >= 1.0) a = 0.0;
    return a;
}

// Distance between two angle fractions on the circle.
double circle_distance(double a, double b) {
    double d = std::abs(a - b);
    return std::min(d, 1.0 - d);
}

// Nearest integer candidate for theta * n on the circle, reduced mod n.
// Returns absent when theta is not aligned with any multiple of 1/n; the
// alignment tolerance is far above evaluation noise and far below the slot
// spacing, so a true exact match is never missed and every accepted
// candidate is still confirmed by exact arithmetic.
std::optional<unsigned> aligned_numerator(double theta, unsigned n) {
    const double scaled = theta * n;
    const auto t = static_cast<long long>(std::llround(scaled));
    if (std::abs(scaled - static_cast<double>(t)) > 1e-6) return std::nullopt;
    return static_cast<unsigned>(((t % n) + n) % n);
}

// Sum of |coefficients|, the scale of the cancellation hidden in eval().
double coefficient_mass(const CycInt& v) {
    double mass = 0.0;
    for (const BigInt& c : v.coeffs()) mass += abs(c).convert_to<double>();
    return mass;
}

// Extended-precision evaluation for sign resolution at large powers.
std::complex<long double> eval_extended(const CycInt& v) {
    const long double step = 2.0L * std::numbers::pi_v<long double> / v.order();
    std::complex<long double> acc{0.0L, 0.0L};
    for (unsigned t = 0; t < v.order(); ++t) {
        const BigInt& c = v.coeffs()[t];
        if (c == 0) continue;
        const long double cf = c.convert_to<long double>();
        acc += std::complex<long double>(cf * std::cos(step * t), cf * std::sin(step * t));
    }
    return acc;
}

}  // namespace

std::vector<EntryClass> classify_scaled_power(const RootMatrix& M, unsigned i, unsigned k) {
    if (i == 0) throw std::invalid_argument("classify_scaled_power: i must be >= 1");
    if (k == 0) throw std::invalid_argument("classify_scaled_power: k must be >= 1");
    if (!verify_bh(M).is_bh)
        throw std::invalid_argument("classify_scaled_power: matrix is not Butson-Hadamard");

    const unsigned m = M.dim();
    const unsigned l = M.root_order();
    const auto ladder_span = lcm_checked(lcm_checked(2ull * l, 2ull * k), 2ull * m);
    if (ladder_span > 0xffffffffull)
        throw std::invalid_argument("classify_scaled_power: candidate order span too large");
    const auto ladder = divisors(static_cast<unsigned>(ladder_span));

    const CycMatrix E = power(M, i);
    const bool odd = (i % 2 == 1);
    const BigInt scale = odd ? BigInt(pow(BigInt(m), (i - 1) / 2)) : BigInt(0);  // sqrt(m)^(i-1)
    const BigInt scale_sq = pow(BigInt(m), i - 1);                               // m^(i-1)
    const double scale_f = std::pow(std::sqrt(static_cast<double>(m)), i - 1);

    std::vector<EntryClass> out;
    out.reserve(std::size_t(m) * m);
    for (unsigned r = 0; r < m; ++r) {
        for (unsigned c = 0; c < m; ++c) {
            EntryClass cls;
            cls.row = r;
            cls.col = c;
            const CycInt& e = E.at(r, c);
            const std::complex<double> z = e.eval();
            // eval() of a power entry cancels mass ~ m^i down to ~ sqrt(m)^(i-1),
            // so its relative noise is eps * mass / scale. The angle prefilter
            // (one exact test per ladder level) is only trusted when that noise
            // is far below the 1e-6 alignment gate; otherwise every exponent is
            // tried exactly.
            const double eps = std::numeric_limits<double>::epsilon();
            const double noise = eps * coefficient_mass(e) / scale_f;
            const bool prefilter = std::isfinite(noise) && noise < 1e-8;

            // A scaled root of unity has modulus sqrt(m)^(i-1); anything far
            // from that cannot match once the evaluation is trustworthy.
            if (prefilter && std::abs(std::abs(z) - scale_f) > 0.25 * scale_f) {
                out.push_back(cls);
                continue;
            }
            const double theta = angle_fraction(z);

            if (odd) {
                for (unsigned n : ladder) {
                    const auto common = static_cast<unsigned>(lcm_checked(l, n));
                    const unsigned stride = common / n;
                    std::optional<unsigned> found;
                    if (prefilter) {
                        if (auto t = aligned_numerator(theta, n)) {
                            const CycInt cand =
                                CycInt::root(common, static_cast<long long>(*t) * stride)
                                    .scaled(scale);
                            if (e.embed(common).equals(cand)) found = *t;
                        }
                    } else {
                        const CycInt embedded = e.embed(common);
                        for (unsigned t = 0; t < n && !found; ++t) {
                            const CycInt cand =
                                CycInt::root(common, static_cast<long long>(t) * stride)
                                    .scaled(scale);
                            if (embedded.equals(cand)) found = t;
                        }
                    }
                    if (found) {
                        cls.root = RootExponent{n, *found};
                        break;
                    }
                }
            } else {
                // Even i: decide on e^2 = m^(i-1) zeta_n^s exactly, then pick
                // the square root among zeta_2n^s and zeta_2n^(s+n); the two
                // candidates are diametrically opposite, so the angle of e
                // resolves the choice. The sign margin is half a turn, which
                // extended precision covers far beyond the double range.
                const CycInt e2 = e * e;
                const double noise2 =
                    eps * coefficient_mass(e2) / (scale_f * scale_f);
                const bool prefilter2 = prefilter && std::isfinite(noise2) && noise2 < 1e-8;
                const double theta2 = angle_fraction(e2.eval());
                for (unsigned n : ladder) {
                    const auto common = static_cast<unsigned>(lcm_checked(l, n));
                    const unsigned stride = common / n;
                    std::optional<unsigned> found;
                    if (prefilter2) {
                        if (auto s = aligned_numerator(theta2, n)) {
                            const CycInt cand =
                                CycInt::root(common, static_cast<long long>(*s) * stride)
                                    .scaled(scale_sq);
                            if (e2.embed(common).equals(cand)) found = *s;
                        }
                    } else {
                        const CycInt embedded = e2.embed(common);
                        for (unsigned s = 0; s < n && !found; ++s) {
                            const CycInt cand =
                                CycInt::root(common, static_cast<long long>(s) * stride)
                                    .scaled(scale_sq);
                            if (embedded.equals(cand)) found = s;
                        }
                    }
                    if (!found) continue;
                    const unsigned two_n = 2 * n;
                    unsigned u = *found;
                    double theta_e = theta;
                    if (!prefilter) {
                        const auto ze = eval_extended(e);
                        const long double noise_ext =
                            1.1e-19L * static_cast<long double>(coefficient_mass(e)) /
                            static_cast<long double>(scale_f);
                        if (!(noise_ext < 0.1L))
                            throw std::domain_error(
                                "classify_scaled_power: power too large for sign resolution");
                        long double af = std::arg(ze) / (2.0L * std::numbers::pi_v<long double>);
                        af -= std::floor(af);
                        theta_e = static_cast<double>(af);
                    }
                    if (circle_distance(theta_e, static_cast<double>(u) / two_n) >
                        circle_distance(theta_e, static_cast<double>(u + n) / two_n))
                        u += n;
                    const unsigned g = std::gcd(u, two_n);  // u == 0 gives g = 2n, the value 1
                    cls.root = RootExponent{two_n / g, u / g};
                    break;
                }
            }

            if (cls.root) {
                cls.in_mu_l = (l % cls.root->order == 0);
                cls.in_mu_k = (k % cls.root->order == 0);
            }
            out.push_back(std::move(cls));
        }
    }
    return out;
}

ConjectureVerdict conjecture_test(const RootMatrix& M) {
    const SpectrumReport rep = spectrum_report(M);
    if (!rep.common_k)
        throw NoCommonOrderError(rep.failure.value_or(SpectrumFailure::mixed_orders));
    return conjecture_test(M, *rep.common_k);
}

ConjectureVerdict conjecture_test(const RootMatrix& M, unsigned k) {
    if (k == 0) throw std::invalid_argument("conjecture_test: k must be >= 1");
    ConjectureVerdict verdict;
    verdict.k = k;
    verdict.holds = true;
    for (unsigned i = 1; i <= k; ++i) {
        if (std::gcd(i, k) != 1) continue;
        const auto classes = classify_scaled_power(M, i, k);
        PerIVerdict per;
        per.all_in_mu_l = true;
        per.all_in_mu_k = true;
        for (const auto& cls : classes) {
            per.all_in_mu_l = per.all_in_mu_l && cls.in_mu_l;
            per.all_in_mu_k = per.all_in_mu_k && cls.in_mu_k;
            if (cls.root) per.summary.distinct_roots.push_back(*cls.root);
            else per.summary.unclassified += 1;
        }
        auto& roots = per.summary.distinct_roots;
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        if (!per.all_in_mu_l && verdict.holds) {
            verdict.holds = false;
            verdict.counterexample_i = i;
        }
        verdict.per_i.emplace(i, std::move(per));
    }
    return verdict;
}

BuiltinExamples builtin_examples() {
    const std::vector<unsigned> ex2_row{1, 3, 4, 4, 3};
    return BuiltinExamples{
        RootMatrix(2, 4, {0, 0, 1, 3}),
        RootMatrix::circulant(5, ex2_row),
        RootMatrix(4, 2,
                   {1, 0, 1, 0,
                    1, 1, 1, 1,
                    0, 0, 1, 1,
                    1, 0, 0, 1}),
    };
}

}  // namespace butson
