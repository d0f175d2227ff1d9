#include <doctest.h>

#include <random>

#include "butson/conjecture.hpp"
#include "butson/matrices.hpp"
#include "testutil.hpp"

using namespace butson;

namespace {

// Exact check that E equals scale * zeta_l^expected entrywise.
bool matches_scaled_exponents(const CycMatrix& E, unsigned l,
                              const std::vector<unsigned>& expected, const BigInt& scale) {
    const unsigned m = E.dim();
    for (unsigned j = 0; j < m; ++j) {
        for (unsigned k = 0; k < m; ++k) {
            const CycInt want = CycInt::root(l, expected[j * m + k]).scaled(scale);
            if (!E.at(j, k).equals(want)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("verify_bh accepts the bundled examples") {
    const auto ex = builtin_examples();
    CHECK(verify_bh(ex.ex1).is_bh);
    CHECK(verify_bh(ex.ex2).is_bh);
    CHECK(verify_bh(ex.ex3).is_bh);
}

TEST_CASE("verify_bh reports the first failing Gram cell") {
    const RootMatrix all_ones(2, 2, {0, 0, 0, 0});
    const auto report = verify_bh(all_ones);
    REQUIRE(!report.is_bh);
    REQUIRE(report.violation.has_value());
    CHECK(report.violation->row == 0);
    CHECK(report.violation->col == 1);
    CHECK(report.violation->value.equals(BigInt(2)));
}

TEST_CASE("circulant layout matches the shifted-row definition") {
    const std::vector<unsigned> row{1, 3, 4, 4, 3};
    const RootMatrix M = RootMatrix::circulant(5, row);
    // Full matrix, row by row (each row is the previous shifted right once).
    const std::vector<unsigned> expect{
        1, 3, 4, 4, 3,
        3, 1, 3, 4, 4,
        4, 3, 1, 3, 4,
        4, 4, 3, 1, 3,
        3, 4, 4, 3, 1,
    };
    for (unsigned j = 0; j < 5; ++j)
        for (unsigned k = 0; k < 5; ++k) CHECK(M.exp_at(j, k) == expect[j * 5 + k]);

    const std::vector<unsigned> one{0};
    const RootMatrix tiny = RootMatrix::circulant(2, one);
    CHECK(tiny.dim() == 1);
    CHECK(tiny.exp_at(0, 0) == 0);

    const std::vector<unsigned> pair{0, 1};
    const RootMatrix swap2 = RootMatrix::circulant(4, pair);
    CHECK(swap2.exp_at(0, 0) == 0);
    CHECK(swap2.exp_at(0, 1) == 1);
    CHECK(swap2.exp_at(1, 0) == 1);
    CHECK(swap2.exp_at(1, 1) == 0);

    const std::vector<unsigned> bad{0, 5};
    CHECK_THROWS_AS(RootMatrix::circulant(5, bad), std::invalid_argument);
}

TEST_CASE("structural predicates") {
    const auto ex = builtin_examples();
    CHECK(is_symmetric(ex.ex2));
    CHECK(is_circulant(ex.ex2));
    CHECK(is_unreal(ex.ex2));
    CHECK(!is_unreal(ex.ex3));  // all entries are +-1
    const RootMatrix unit(1, 1, {0});
    CHECK(is_symmetric(unit));
    CHECK(is_circulant(unit));
    CHECK(!is_unreal(unit));
}

TEST_CASE("exact powers of the bundled examples") {
    const auto ex = builtin_examples();
    // (1/4) M^5 = [[i, 1], [i, -1]] for the 2x2 example.
    CHECK(matches_scaled_exponents(power(ex.ex1, 5), 4, {1, 0, 1, 2}, BigInt(4)));
    // (1/2) M^2 for the 4x4 example, exponents over mu_2.
    CHECK(matches_scaled_exponents(power(ex.ex3, 2), 2,
                                   {1, 1, 0, 1,
                                    0, 1, 0, 0,
                                    1, 1, 1, 0,
                                    0, 1, 1, 1},
                                   BigInt(2)));
    // i = 1 is the matrix itself.
    const CycMatrix first = power(ex.ex2, 1);
    for (unsigned j = 0; j < 5; ++j)
        for (unsigned k = 0; k < 5; ++k) CHECK(first.at(j, k).equals(ex.ex2.entry(j, k)));
}

TEST_CASE("power is multiplicative") {
    const auto ex = builtin_examples();
    for (const RootMatrix& M : {ex.ex2, RootMatrix::fourier(3)}) {
        for (unsigned i = 1; i <= 3; ++i) {
            for (unsigned j = 1; j + i <= 4; ++j) {
                CHECK(power(M, i + j).equals(power(M, i) * power(M, j)));
            }
        }
    }
}

TEST_CASE("kronecker products") {
    const RootMatrix f2 = RootMatrix::fourier(2);
    const RootMatrix k22 = kronecker(f2, f2);
    CHECK(k22.dim() == 4);
    CHECK(k22.root_order() == 2);
    CHECK(verify_bh(k22).is_bh);

    const auto ex = builtin_examples();
    const RootMatrix unit(1, 1, {0});
    CHECK(kronecker(ex.ex1, unit) == ex.ex1);

    const RootMatrix big = kronecker(ex.ex1, ex.ex2);
    CHECK(big.dim() == 10);
    CHECK(big.root_order() == 20);
    CHECK(verify_bh(big).is_bh);
}

TEST_CASE("fourier matrices") {
    const RootMatrix f2 = RootMatrix::fourier(2);
    CHECK(f2.exponents()[0] == 0);
    CHECK(f2.exponents()[1] == 0);
    CHECK(f2.exponents()[2] == 0);
    CHECK(f2.exponents()[3] == 1);
    const RootMatrix f3 = RootMatrix::fourier(3);
    const std::vector<unsigned> expect3{0, 0, 0, 0, 1, 2, 0, 2, 1};
    CHECK(std::vector<unsigned>(f3.exponents().begin(), f3.exponents().end()) == expect3);
    CHECK(verify_bh(RootMatrix::fourier(7)).is_bh);
    for (unsigned m = 1; m <= 12; ++m) CHECK(verify_bh(RootMatrix::fourier(m)).is_bh);
}

TEST_CASE("entries of powers keep the scaled Gram rows") {
    // For BH inputs the exact Gram of M^i is m^i I; the diagonal gives the
    // row-norm identity sum_k e e* = m^i.
    const auto ex = builtin_examples();
    for (const RootMatrix& M : {ex.ex1, ex.ex3}) {
        for (unsigned i = 1; i <= 4; ++i) {
            const CycMatrix E = power(M, i);
            const CycMatrix G = E * E.conj_transpose();
            const BigInt mi = pow(BigInt(M.dim()), i);
            CHECK(G.equals(CycMatrix::identity(M.dim(), M.root_order(), mi)));
        }
    }
}

TEST_CASE("circulants are circulant; symmetry iff palindromic first row") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 500; ++iter) {
        const unsigned m = 1 + rng() % 7;
        const unsigned l = 1 + rng() % 9;
        std::vector<unsigned> row(m);
        for (auto& e : row) e = static_cast<unsigned>(rng() % l);
        const RootMatrix M = RootMatrix::circulant(l, row);
        REQUIRE(is_circulant(M));
        bool palindromic = true;
        for (unsigned s = 0; s < m; ++s) palindromic = palindromic && (row[(m - s) % m] == row[s]);
        REQUIRE(is_symmetric(M) == palindromic);
    }
}

TEST_CASE("matrix text format round trip") {
    const auto ex = builtin_examples();
    for (const RootMatrix& M : {ex.ex1, ex.ex2, ex.ex3}) {
        CHECK(parse_matrix(format_matrix(M)) == M);
    }
    const RootMatrix circ = parse_matrix("circ 5 5\n1 3 4 4 3\n");
    CHECK(circ == ex.ex2);
}

TEST_CASE("parser diagnostics carry positions") {
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("nope 2 2\n0 0\n0 0\n"), ParseError);

    try {
        parse_matrix("bh 2 2\n0 0\n0\n");
        FAIL("short row accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    try {
        parse_matrix("bh 2 2\n0 2\n0 0\n");
        FAIL("out-of-range exponent accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 3);
    }

    try {
        parse_matrix("bh 2 2\n0 0\n0 0\n1 1\n");
        FAIL("extra row accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }

    CHECK_THROWS_AS(parse_matrix("bh 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("bh 2 2\n0 x\n0 0\n"), ParseError);
}

TEST_CASE("root matrix validation") {
    CHECK_THROWS_AS(RootMatrix(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(RootMatrix(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(RootMatrix(2, 2, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(RootMatrix(2, 2, {0, 0, 0, 2}), std::invalid_argument);
    RootMatrix M(2, 3);
    M.set_exp(0, 1, 2);
    CHECK(M.exp_at(0, 1) == 2);
    CHECK_THROWS_AS(M.set_exp(0, 0, 3), std::invalid_argument);
}
