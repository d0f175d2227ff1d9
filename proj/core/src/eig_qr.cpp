#include "eig_qr.hpp"

#include <cmath>
#include <limits>

#include "butson/spectra.hpp"

namespace butson::detail {

namespace {

using C = std::complex<double>;

// |Re| + |Im|, the cheap magnitude used throughout the QR kernel.
double cabs1(C z) { return std::abs(z.real()) + std::abs(z.imag()); }

struct Givens {
    double c;
    C s;
};

// Rotation [c, s; -conj(s), c] with real c >= 0 mapping (f, g) to (r, 0).
Givens make_givens(C f, C g) {
    const double af = std::abs(f);
    const double ag = std::abs(g);
    if (ag == 0.0) return {1.0, C(0.0, 0.0)};
    if (af == 0.0) return {0.0, std::conj(g) / ag};
    const double d = std::hypot(af, ag);
    return {af / d, (f / af) * std::conj(g) / d};
}

}  // namespace

EigenSolution schur_eigen(std::vector<C> a, unsigned n, unsigned max_sweeps) {
    auto A = [&](unsigned r, unsigned c) -> C& { return a[std::size_t(r) * n + c]; };
    std::vector<C> zbuf(std::size_t(n) * n, C(0.0, 0.0));
    auto Z = [&](unsigned r, unsigned c) -> C& { return zbuf[std::size_t(r) * n + c]; };
    for (unsigned j = 0; j < n; ++j) Z(j, j) = 1.0;

    double anorm = 0.0;
    for (const C& v : a) anorm += std::norm(v);
    anorm = std::sqrt(anorm);
    if (anorm == 0.0) anorm = 1.0;

    // Householder reduction to upper Hessenberg form, accumulating the
    // transform into Z (A := H A H with H = I - 2 v v^H).
    std::vector<C> v(n);
    for (unsigned k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (unsigned r = k + 1; r < n; ++r) xnorm2 += std::norm(A(r, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm <= anorm * 1e-300) continue;
        const C x0 = A(k + 1, k);
        const C alpha = (std::abs(x0) == 0.0) ? C(-xnorm, 0.0) : -(x0 / std::abs(x0)) * xnorm;
        const unsigned len = n - k - 1;
        v[0] = x0 - alpha;
        for (unsigned r = 1; r < len; ++r) v[r] = A(k + 1 + r, k);
        double vnorm2 = 0.0;
        for (unsigned r = 0; r < len; ++r) vnorm2 += std::norm(v[r]);
        if (vnorm2 == 0.0) continue;
        const double inv = 1.0 / std::sqrt(vnorm2);
        for (unsigned r = 0; r < len; ++r) v[r] *= inv;
        for (unsigned c = 0; c < n; ++c) {
            C s(0.0, 0.0);
            for (unsigned r = 0; r < len; ++r) s += std::conj(v[r]) * A(k + 1 + r, c);
            s *= 2.0;
            for (unsigned r = 0; r < len; ++r) A(k + 1 + r, c) -= s * v[r];
        }
        for (unsigned r = 0; r < n; ++r) {
            C s(0.0, 0.0);
            for (unsigned c = 0; c < len; ++c) s += A(r, k + 1 + c) * v[c];
            s *= 2.0;
            for (unsigned c = 0; c < len; ++c) A(r, k + 1 + c) -= s * std::conj(v[c]);
        }
        for (unsigned r = 0; r < n; ++r) {
            C s(0.0, 0.0);
            for (unsigned c = 0; c < len; ++c) s += Z(r, k + 1 + c) * v[c];
            s *= 2.0;
            for (unsigned c = 0; c < len; ++c) Z(r, k + 1 + c) -= s * std::conj(v[c]);
        }
        A(k + 1, k) = alpha;
        for (unsigned r = k + 2; r < n; ++r) A(r, k) = 0.0;
    }

    // Single-shift QR in the style of LAPACK's small-matrix kernel:
    // Ahues-Tisseur deflation, Wilkinson shifts with periodic exceptional
    // shifts taken from either end of the active window, and a sweep start
    // chosen at a pair of consecutive small subdiagonals when one exists.
    const double ulp = std::numeric_limits<double>::epsilon();
    const double smlnum = std::numeric_limits<double>::min() * (double(n) / ulp);
    const double dat1 = 0.75;
    const unsigned kexsh = 10;
    unsigned total_sweeps = 0;
    unsigned kdefl = 0;

    int hi = static_cast<int>(n) - 1;
    while (hi > 0) {
        // Find the active window [lo, hi]: walk up until a negligible
        // subdiagonal deflates.
        int lo = hi;
        while (lo > 0) {
            const C sub = A(lo, lo - 1);
            if (cabs1(sub) <= smlnum) break;
            double tst = cabs1(A(lo - 1, lo - 1)) + cabs1(A(lo, lo));
            if (tst == 0.0) {
                if (lo >= 2) tst += std::abs(A(lo - 1, lo - 2).real());
                if (lo + 1 < static_cast<int>(n)) tst += std::abs(A(lo + 1, lo).real());
            }
            if (cabs1(sub) <= ulp * tst) {
                // Ahues-Tisseur: compare against the opposite off-diagonal
                // entry so nearly-converged couplings deflate early.
                const double ab = std::max(cabs1(sub), cabs1(A(lo - 1, lo)));
                const double ba = std::min(cabs1(sub), cabs1(A(lo - 1, lo)));
                const double aa =
                    std::max(cabs1(A(lo, lo)), cabs1(A(lo - 1, lo - 1) - A(lo, lo)));
                const double bb =
                    std::min(cabs1(A(lo, lo)), cabs1(A(lo - 1, lo - 1) - A(lo, lo)));
                const double s = aa + ab;
                if (ba * (ab / s) <= std::max(smlnum, ulp * (bb * (aa / s)))) break;
            }
            --lo;
        }
        if (lo > 0) A(lo, lo - 1) = 0.0;
        if (lo == hi) {
            --hi;
            continue;
        }

        if (++total_sweeps > max_sweeps)
            throw NumericFailure(static_cast<unsigned>(hi),
                                 "eigensolver failed to converge at index " + std::to_string(hi));
        ++kdefl;

        // Shift selection.
        C t;
        if (kdefl % (2 * kexsh) == 0) {
            t = A(hi, hi) + dat1 * std::abs(A(hi, hi - 1).real());
        } else if (kdefl % kexsh == 0) {
            t = A(lo, lo) + dat1 * std::abs(A(lo + 1, lo).real());
        } else {
            t = A(hi, hi);
            const C u = std::sqrt(A(hi - 1, hi)) * std::sqrt(A(hi, hi - 1));
            double s = cabs1(u);
            if (s != 0.0) {
                const C x = 0.5 * (A(hi - 1, hi - 1) - t);
                const double sx = cabs1(x);
                s = std::max(s, sx);
                C y = double(s) * std::sqrt((x / s) * (x / s) + (u / s) * (u / s));
                if (sx > 0.0 &&
                    (x.real() / sx) * y.real() + (x.imag() / sx) * y.imag() < 0.0)
                    y = -y;
                t -= u * (u / (x + y));
            }
        }

        // Start the sweep at a pair of consecutive small subdiagonals when
        // that loses nothing, otherwise at lo.
        int m = lo;
        C v1, v2;
        for (int mm = hi - 1; mm > lo; --mm) {
            C h11s = A(mm, mm) - t;
            const C h21 = A(mm + 1, mm);
            const double s = cabs1(h11s) + cabs1(h21);
            h11s /= s;
            const C h21n = h21 / s;
            if (cabs1(A(mm, mm - 1)) * cabs1(h21n) <=
                ulp * (cabs1(h11s) * (cabs1(A(mm, mm)) + cabs1(A(mm + 1, mm + 1))))) {
                m = mm;
                v1 = h11s;
                v2 = h21n;
                break;
            }
        }
        if (m == lo) {
            v1 = A(lo, lo) - t;
            v2 = A(lo + 1, lo);
        }

        // Bulge chase over [m, hi].
        for (int i = m; i < hi; ++i) {
            Givens g;
            if (i > m) {
                g = make_givens(A(i, i - 1), A(i + 1, i - 1));
                const double r = std::hypot(std::abs(A(i, i - 1)), std::abs(A(i + 1, i - 1)));
                const C f = A(i, i - 1);
                A(i, i - 1) = (std::abs(f) == 0.0) ? C(r, 0.0) : (f / std::abs(f)) * r;
                A(i + 1, i - 1) = 0.0;
            } else {
                g = make_givens(v1, v2);
            }
            for (unsigned c = i; c < n; ++c) {
                const C t1 = A(i, c), t2 = A(i + 1, c);
                A(i, c) = g.c * t1 + g.s * t2;
                A(i + 1, c) = -std::conj(g.s) * t1 + g.c * t2;
            }
            const unsigned row_cap = std::min<unsigned>(i + 2, hi) + 1;
            for (unsigned r = 0; r < row_cap; ++r) {
                const C t1 = A(r, i), t2 = A(r, i + 1);
                A(r, i) = g.c * t1 + std::conj(g.s) * t2;
                A(r, i + 1) = -g.s * t1 + g.c * t2;
            }
            for (unsigned r = 0; r < n; ++r) {
                const C t1 = Z(r, i), t2 = Z(r, i + 1);
                Z(r, i) = g.c * t1 + std::conj(g.s) * t2;
                Z(r, i + 1) = -g.s * t1 + g.c * t2;
            }
        }
    }

    // Eigenvectors of the triangular factor by back-substitution, then map
    // through the accumulated Schur basis.
    EigenSolution sol;
    sol.values.resize(n);
    for (unsigned j = 0; j < n; ++j) sol.values[j] = A(j, j);
    sol.vectors.assign(n, std::vector<C>(n, C(0.0, 0.0)));
    const double smldenom = std::max(ulp * anorm, 1e-300);
    std::vector<C> y(n);
    for (unsigned j = 0; j < n; ++j) {
        y[j] = 1.0;
        for (int i = static_cast<int>(j) - 1; i >= 0; --i) {
            C num(0.0, 0.0);
            for (unsigned k = i + 1; k <= j; ++k) num += A(i, k) * y[k];
            C den = A(i, i) - A(j, j);
            if (std::abs(den) < smldenom) den = C(smldenom, 0.0);
            y[i] = -num / den;
        }
        auto& vec = sol.vectors[j];
        double norm2 = 0.0;
        for (unsigned r = 0; r < n; ++r) {
            C s(0.0, 0.0);
            for (unsigned k = 0; k <= j; ++k) s += Z(r, k) * y[k];
            vec[r] = s;
            norm2 += std::norm(s);
        }
        const double invn = 1.0 / std::sqrt(norm2);
        for (unsigned r = 0; r < n; ++r) vec[r] *= invn;
    }
    return sol;
}

}  // namespace butson::detail
