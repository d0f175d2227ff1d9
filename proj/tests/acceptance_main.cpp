// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Tolerances are fixed here and nowhere else; the float-based oracles are
// independent of the exact pipeline they validate.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "butson/conjecture.hpp"
#include "butson/cyclotomic.hpp"
#include "butson/matrices.hpp"
#include "butson/numtheory.hpp"
#include "butson/search.hpp"
#include "butson/spectra.hpp"
#include "report_json.hpp"

using namespace butson;
using Clock = std::chrono::steady_clock;
using Complex = std::complex<double>;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

void criterion(int number, const char* name, const std::function<bool()>& body) {
    notes.clear();
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note(std::string("exception: ") + e.what());
        ok = false;
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", number, name, secs);
    if (!ok) {
        ++failures;
        for (const auto& s : notes) std::printf("       - %s\n", s.c_str());
    }
}

bool expect(bool cond, const std::string& what) {
    if (!cond) note(what);
    return cond;
}

Complex unit_root(unsigned n, std::uint64_t t) {
    const double a = 2.0 * std::numbers::pi * double(t % n) / n;
    return {std::cos(a), std::sin(a)};
}

Complex turn(double fraction) {
    return {std::cos(2.0 * std::numbers::pi * fraction), std::sin(2.0 * std::numbers::pi * fraction)};
}

double angle_key(Complex z) {
    double a = std::arg(z);
    if (a < 0) a += 2.0 * std::numbers::pi;
    if (a >= 2.0 * std::numbers::pi - 1e-9) a = 0.0;
    return a;
}

bool multiset_close(std::vector<Complex> a, std::vector<Complex> b, double tol) {
    if (a.size() != b.size()) return false;
    auto cmp = [](Complex x, Complex y) { return angle_key(x) < angle_key(y); };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

// --------------------------------------------------------------------------
// Independent float pipeline for the (5,5) scan (criterion 5): plain complex
// arithmetic end to end, no shared code with the exact implementation.

struct FloatScan {
    std::uint64_t bh_count = 0;
    std::uint64_t counterexample_count = 0;
    std::uint64_t no_common_k = 0;
    std::vector<std::vector<unsigned>> counterexample_rows;
};

std::vector<Complex> complex_circulant(unsigned l, const std::vector<unsigned>& row) {
    const auto m = static_cast<unsigned>(row.size());
    std::vector<Complex> a(std::size_t(m) * m);
    for (unsigned j = 0; j < m; ++j)
        for (unsigned k = 0; k < m; ++k) a[std::size_t(j) * m + k] = unit_root(l, row[(k + m - j) % m]);
    return a;
}

std::vector<Complex> complex_mul(const std::vector<Complex>& x, const std::vector<Complex>& y,
                                 unsigned m) {
    std::vector<Complex> r(std::size_t(m) * m, Complex{0, 0});
    for (unsigned j = 0; j < m; ++j)
        for (unsigned s = 0; s < m; ++s) {
            const Complex v = x[std::size_t(j) * m + s];
            for (unsigned k = 0; k < m; ++k) r[std::size_t(j) * m + k] += v * y[std::size_t(s) * m + k];
        }
    return r;
}

FloatScan float_oracle_scan_55() {
    FloatScan out;
    const unsigned m = 5, l = 5;
    for (std::uint64_t rank = 0; rank < 3125; ++rank) {
        std::vector<unsigned> row(m);
        std::uint64_t r = rank;
        for (unsigned j = m; j-- > 0;) {
            row[j] = static_cast<unsigned>(r % l);
            r /= l;
        }
        const auto a = complex_circulant(l, row);
        // Gram check in floats.
        double defect = 0.0;
        for (unsigned j = 0; j < m; ++j)
            for (unsigned k = 0; k < m; ++k) {
                Complex s{0, 0};
                for (unsigned t = 0; t < m; ++t)
                    s += a[std::size_t(j) * m + t] * std::conj(a[std::size_t(k) * m + t]);
                if (j == k) s -= double(m);
                defect = std::max(defect, std::abs(s));
            }
        if (defect > 1e-9 * m) continue;
        out.bh_count += 1;

        // Circulant eigenvalues by direct evaluation of the first-row sum.
        std::vector<Complex> lambda(m);
        for (unsigned j = 0; j < m; ++j) {
            Complex s{0, 0};
            for (unsigned t = 0; t < m; ++t)
                s += unit_root(l, row[t]) * unit_root(m, std::uint64_t(j) * t);
            lambda[j] = s / std::sqrt(double(m));
        }
        // Per-eigenvalue order by brute force.
        std::vector<unsigned> orders(m, 0);
        for (unsigned j = 0; j < m; ++j) {
            Complex p{1, 0};
            for (unsigned q = 1; q <= 40; ++q) {
                p *= lambda[j];
                if (std::abs(p - Complex{1, 0}) < 1e-6) {
                    orders[j] = q;
                    break;
                }
            }
        }
        bool common = orders[0] != 0;
        for (unsigned j = 1; j < m; ++j) common = common && orders[j] == orders[0];
        if (!common) {
            out.no_common_k += 1;
            continue;
        }
        const unsigned k = orders[0];

        // Scaled powers: entries of sqrt(m)^(1-i) M^i must be l-th roots.
        bool holds = true;
        auto pw = a;  // M^1
        unsigned at_i = 1;
        for (unsigned i = 1; i <= k; ++i) {
            while (at_i < i) {
                pw = complex_mul(pw, a, m);
                ++at_i;
            }
            if (std::gcd(i, k) != 1) continue;
            const double scale = std::pow(std::sqrt(double(m)), double(i) - 1.0);
            bool all_in_mu_l = true;
            for (const Complex& e : pw) {
                const Complex u = e / scale;
                bool in_l = false;
                for (unsigned t = 0; t < l; ++t) in_l = in_l || std::abs(u - unit_root(l, t)) < 1e-6;
                all_in_mu_l = all_in_mu_l && in_l;
            }
            if (!all_in_mu_l) {
                holds = false;
                break;
            }
        }
        if (!holds) {
            out.counterexample_count += 1;
            out.counterexample_rows.push_back(row);
        }
    }
    return out;
}

// --------------------------------------------------------------------------

bool criterion1() {
    const auto start = Clock::now();
    const auto ex = builtin_examples();
    bool ok = expect(ex.ex1.dim() == 2 && ex.ex1.root_order() == 4, "ex1 shape");
    ok &= expect(verify_bh(ex.ex1).is_bh, "ex1 verifies");

    const auto rep = spectrum_report(ex.ex1);
    ok &= expect(rep.common_k == 24u, "common k is 24");
    std::vector<Complex> got;
    for (const auto& f : rep.findings) got.push_back(f.value);
    ok &= expect(multiset_close(got, {turn(1.0 / 24), turn(17.0 / 24)}, 1e-9),
                 "angles {1/24, 17/24} of 2pi");

    const auto classes = classify_scaled_power(ex.ex1, 5, 24);
    const CycMatrix E = power(ex.ex1, 5);
    const std::vector<unsigned> expected{1, 0, 1, 2};
    bool entries_ok = true;
    for (unsigned j = 0; j < 2; ++j)
        for (unsigned kk = 0; kk < 2; ++kk)
            entries_ok = entries_ok &&
                         E.at(j, kk).equals(CycInt::root(4, expected[j * 2 + kk]).scaled(4));
    ok &= expect(entries_ok, "M^5 = 4 * zeta_4^[[1,0],[1,2]] exactly");
    for (const auto& c : classes) ok &= expect(c.in_mu_l, "all entries in mu_4");

    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    ok &= expect(secs < 1.0, "runtime under 1 s");
    return ok;
}

bool criterion2() {
    const auto start = Clock::now();
    const std::vector<unsigned> row{1, 3, 4, 4, 3};
    const RootMatrix M = RootMatrix::circulant(5, row);
    bool ok = expect(verify_bh(M).is_bh, "circulant(5,(1,3,4,4,3)) verifies exactly");

    const auto rep = spectrum_report(M);
    ok &= expect(rep.exact_path, "exact spectrum path");
    ok &= expect(rep.common_k == 10u, "common k is 10");
    for (const auto& f : rep.findings) {
        ok &= expect(f.order == 10u && f.primitive, "order-10 primitive eigenvalue");
        ok &= expect(f.exact_h.has_value(), "exact h present");
    }
    // Exact angle multiset: the reduced angle numerators over den 10 must be
    // {1,1,3,3,7}; each is pinned by an exact square identity plus a sign
    // with margin 2.
    std::vector<unsigned> nums;
    for (const auto& f : rep.findings) {
        const auto frac = cli::angle_fraction_of(f);
        if (!frac || frac->second != 10) return expect(false, "angle fraction missing");
        const auto& h = *f.exact_h;
        const CycInt h2 = (h * h).embed(10);
        const CycInt want = CycInt::root(10, 2ll * frac->first).scaled(BigInt(5));
        ok &= expect(h2.equals(want), "h^2 = 5 zeta_10^(2t) exactly");
        nums.push_back(frac->first);
    }
    std::sort(nums.begin(), nums.end());
    ok &= expect(nums == std::vector<unsigned>{1, 1, 3, 3, 7}, "angle multiset {1,1,3,3,7}/10");

    const auto verdict = conjecture_test(M, 10);
    ok &= expect(!verdict.holds, "conjecture fails");
    ok &= expect(verdict.counterexample_i == 3u, "counterexample at i = 3");
    const auto& at3 = verdict.per_i.at(3);
    ok &= expect(at3.summary.distinct_roots ==
                     std::vector<RootExponent>{{10, 1}, {10, 3}, {10, 9}},
                 "exactly three distinct entries zeta_10^{1,3,9}");
    ok &= expect(!at3.all_in_mu_l, "entries outside mu_5");
    ok &= expect(at3.all_in_mu_k, "entries inside mu_10");
    ok &= expect(at3.summary.unclassified == 0, "every entry classified");

    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    ok &= expect(secs < 1.0, "runtime under 1 s");
    return ok;
}

bool criterion3() {
    const auto ex = builtin_examples();
    bool ok = expect(verify_bh(ex.ex3).is_bh, "ex3 verifies");

    const auto rep = spectrum_report(ex.ex3);
    ok &= expect(rep.common_k == 3u, "common k is 3");
    std::vector<Complex> got;
    for (const auto& f : rep.findings) got.push_back(f.value);
    ok &= expect(multiset_close(got,
                                {turn(1.0 / 3), turn(1.0 / 3), turn(2.0 / 3), turn(2.0 / 3)},
                                1e-9),
                 "eigenvalues {e^(2pi i/3) x2, e^(4pi i/3) x2}");

    const CycMatrix E = power(ex.ex3, 2);
    const std::vector<unsigned> expected{1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1};
    bool entries_ok = true;
    for (unsigned j = 0; j < 4; ++j)
        for (unsigned k = 0; k < 4; ++k)
            entries_ok = entries_ok &&
                         E.at(j, k).equals(CycInt::root(2, expected[j * 4 + k]).scaled(2));
    ok &= expect(entries_ok, "M^2 = 2 * zeta_2^[[..]] exactly");

    const auto verdict = conjecture_test(ex.ex3, 3);
    ok &= expect(verdict.holds, "conjecture holds (mu_2 membership)");
    ok &= expect(verdict.per_i.at(2).all_in_mu_l, "i=2 entries in mu_2");
    ok &= expect(!verdict.per_i.at(2).all_in_mu_k, "i=2 entries not all in mu_3");
    return ok;
}

bool criterion4() {
    const auto ex = builtin_examples();
    bool ok = expect(power(ex.ex1, 24).equals(CycMatrix::identity(2, 4, BigInt(1) << 12)),
                     "M^24 = 2^12 I for ex1");
    ok &= expect(power(ex.ex2, 10).equals(CycMatrix::identity(5, 5, pow(BigInt(5), 5))),
                 "M^10 = 5^5 I for ex2");
    ok &= expect(power(ex.ex3, 3).equals(CycMatrix::identity(4, 2, BigInt(8))),
                 "M^3 = 8 I for ex3");
    return ok;
}

bool criterion5() {
    const FloatScan oracle = float_oracle_scan_55();

    SearchConfig cfg;
    cfg.m = 5;
    cfg.l = 5;
    SearchOptions opts;
    opts.workers = 1;
    const auto start = Clock::now();
    const auto rep = run_search(cfg, opts);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();

    bool ok = expect(secs < 60.0, "single-worker scan under 60 s");
    ok &= expect(rep.scanned == 3125, "scanned all 3125 rows");
    ok &= expect(rep.bh_count == oracle.bh_count,
                 "bh_count matches the float oracle (" + std::to_string(rep.bh_count) + " vs " +
                     std::to_string(oracle.bh_count) + ")");
    ok &= expect(rep.counterexample_count == oracle.counterexample_count,
                 "counterexample_count matches the float oracle (" +
                     std::to_string(rep.counterexample_count) + " vs " +
                     std::to_string(oracle.counterexample_count) + ")");
    ok &= expect(rep.no_common_k_count == oracle.no_common_k,
                 "no_common_k_count matches the float oracle");

    const Counterexample want{{1, 3, 4, 4, 3}, 10, 3};
    bool found = false;
    for (const auto& ce : rep.counterexamples) found = found || ce == want;
    ok &= expect(found, "row (1,3,4,4,3) reported with k=10, i=3");

    // Same rows, row by row.
    std::vector<std::vector<unsigned>> got_rows;
    for (const auto& ce : rep.counterexamples) got_rows.push_back(ce.first_row);
    ok &= expect(got_rows == oracle.counterexample_rows,
                 "counterexample row lists agree in rank order");
    return ok;
}

bool criterion6() {
    bool ok = true;

    // (a) Ring axioms, 1000 random cases; product identity up to N = 200.
    {
        std::mt19937_64 rng(987654321);
        std::uniform_int_distribution<unsigned> order_dist(1, 60);
        std::uniform_int_distribution<int> coeff(-9, 9);
        bool axioms = true;
        for (int it = 0; it < 1000 && axioms; ++it) {
            const unsigned n = order_dist(rng);
            auto rand_cyc = [&] {
                std::vector<BigInt> c(n);
                for (auto& x : c) x = coeff(rng);
                return CycInt(n, std::move(c));
            };
            const CycInt a = rand_cyc(), b = rand_cyc(), c = rand_cyc();
            axioms = axioms && ((a + b) + c).equals(a + (b + c));
            axioms = axioms && (a * b).equals(b * a);
            axioms = axioms && ((a * b) * c).equals(a * (b * c));
            axioms = axioms && (a * (b + c)).equals(a * b + a * c);
        }
        ok &= expect(axioms, "ring axioms on 1000 random triples");

        bool phi_ok = true;
        for (unsigned n = 1; n <= 200 && phi_ok; ++n) {
            IntPoly prod({BigInt(1)});
            for (unsigned d : divisors(n)) prod = prod * cyclotomic_polynomial(d);
            phi_ok = prod == IntPoly::power_minus_one(n) &&
                     cyclotomic_polynomial(n).degree() == int(totient(n));
        }
        ok &= expect(phi_ok, "cyclotomic product identity and degrees up to N = 200");
    }

    // (b) Autocorrelation against the full Gram check, exhaustive m, l <= 4.
    {
        bool agree = true;
        for (unsigned m = 1; m <= 4 && agree; ++m) {
            for (unsigned l = 1; l <= 4 && agree; ++l) {
                std::uint64_t total = 1;
                for (unsigned j = 0; j < m; ++j) total *= l;
                for (std::uint64_t rank = 0; rank < total && agree; ++rank) {
                    const auto row = row_from_rank(l, m, rank);
                    agree = autocorrelation_is_bh(l, row) ==
                            verify_bh(RootMatrix::circulant(l, row)).is_bh;
                }
            }
        }
        ok &= expect(agree, "autocorrelation equals the Gram oracle exhaustively (m, l <= 4)");
    }

    // (c) order_numeric across every angle p/q with q <= 48.
    {
        bool orders = true;
        for (unsigned q = 1; q <= 48 && orders; ++q) {
            for (unsigned p = 0; p < q && orders; ++p) {
                const auto got = order_numeric(turn(double(p) / q), 48);
                orders = got.has_value() && *got == q / std::gcd(p, q);
            }
        }
        ok &= expect(orders, "order_numeric exact on all p/q, q <= 48");
    }

    // (d) verify_bh on Fourier matrices up to m = 32 and Kronecker products.
    {
        bool fourier_ok = true;
        for (unsigned m = 1; m <= 32 && fourier_ok; ++m)
            fourier_ok = verify_bh(RootMatrix::fourier(m)).is_bh;
        ok &= expect(fourier_ok, "fourier(m) verifies for m <= 32");

        const auto ex = builtin_examples();
        std::vector<RootMatrix> pool{ex.ex1, ex.ex2, ex.ex3, RootMatrix::fourier(2),
                                     RootMatrix::fourier(3), RootMatrix::fourier(5)};
        std::mt19937_64 rng(13);
        bool kron_ok = true;
        for (int it = 0; it < 12 && kron_ok; ++it) {
            const auto& A = pool[rng() % pool.size()];
            const auto& B = pool[rng() % pool.size()];
            if (std::uint64_t(A.dim()) * B.dim() > 25) continue;
            kron_ok = verify_bh(kronecker(A, B)).is_bh;
        }
        ok &= expect(kron_ok, "kronecker products of verified matrices verify");
    }

    // (e) Worker-count determinism, byte-identical serialized reports.
    {
        SearchConfig cfg;
        cfg.m = 5;
        cfg.l = 5;
        SearchOptions w1, w4;
        w1.workers = 1;
        w4.workers = 4;
        const auto a = run_search(cfg, w1);
        const auto b = run_search(cfg, w4);
        ok &= expect(cli::search_json(a).dump() == cli::search_json(b).dump(),
                     "1-worker and 4-worker reports byte-identical");
    }
    return ok;
}

bool criterion7() {
    const auto ex = builtin_examples();
    std::vector<RootMatrix> corpus{ex.ex1, ex.ex2, ex.ex3};
    for (unsigned m = 1; m <= 8; ++m) corpus.push_back(RootMatrix::fourier(m));
    corpus.push_back(kronecker(ex.ex1, ex.ex1));
    corpus.push_back(kronecker(RootMatrix::fourier(2), ex.ex3));
    const std::vector<unsigned> r42{0, 0, 0, 1};
    corpus.push_back(RootMatrix::circulant(2, r42));
    const std::vector<unsigned> r33{0, 0, 1};
    corpus.push_back(RootMatrix::circulant(3, r33));

    bool ok = true;
    for (const auto& M : corpus) {
        if (!verify_bh(M).is_bh) {
            ok &= expect(false, "corpus matrix fails to verify");
            continue;
        }
        const auto values = eig_numeric(M);
        for (auto v : values)
            ok &= expect(std::abs(std::abs(v) - 1.0) <= 1e-9, "eigenvalue modulus within 1e-9");
        if (is_circulant(M)) {
            std::vector<Complex> exact;
            for (const auto& h : circulant_eigenvalues_exact(M))
                exact.push_back(h.eval() / std::sqrt(double(M.dim())));
            ok &= expect(multiset_close(exact, values, 1e-7),
                         "exact and numeric circulant spectra agree within 1e-7");
        }
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "golden 2x2 example end to end", criterion1);
    criterion(2, "golden 5x5 circulant counterexample end to end", criterion2);
    criterion(3, "golden 4x4 constant-diagonal example end to end", criterion3);
    criterion(4, "exact power identities M^k = m^(k/2) I", criterion4);
    criterion(5, "full (5,5) scan matches the independent float oracle", criterion5);
    criterion(6, "property suites", criterion6);
    criterion(7, "numeric eigensolver quality", criterion7);
    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
