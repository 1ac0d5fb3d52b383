#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brunnian/matrix.hpp"
#include "brunnian/polynomial.hpp"

using namespace brunnian;

namespace {

// Independent determinant oracle: plain Laplace expansion along the last row.
// Deliberately a separate code path from the production Bareiss/cofactor mix.
IntPolynomial det_oracle(const PolyMatrix& a) {
    std::size_t n = a.size();
    if (n == 0) return IntPolynomial(1);
    if (n == 1) return a.at(0, 0);
    IntPolynomial acc;
    std::size_t r = n - 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(r, j).is_zero()) continue;
        PolyMatrix minor(n - 1);
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i, cc++) = a.at(i, c);
            }
        }
        IntPolynomial term = a.at(r, j) * det_oracle(minor);
        acc = ((r + j) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("bigint arithmetic is exact") {
    Int a("123456789012345678901234567890");
    Int b(-7);
    CHECK((a * b).to_string() == "-864197523086419752308641975230");
    CHECK(Int::div_exact(a * b, b) == a);
    CHECK((a - a).is_zero());
    CHECK(Int(5) < Int(7));
    CHECK(Int(-5).abs() == Int(5));
    CHECK_THROWS_AS(Int::div_exact(Int(7), Int(2)), std::domain_error);
    CHECK_THROWS_AS(Int("12x"), std::invalid_argument);
    CHECK_FALSE(Int("99999999999999999999").fits_long());
}

TEST_CASE("matrix text format round trip") {
    IntMatrix m{{1, 0, 1}, {0, 1, 1}, {0, 0, 5}};
    IntMatrix p = IntMatrix::parse_text(m.to_text());
    CHECK(p == m);
    CHECK(IntMatrix::parse_text("1 1\n-42\n").at(0, 0) == Int(-42));
    CHECK_THROWS_AS(IntMatrix::parse_text("2 2\n1 2 3"), ParseError);
    CHECK_THROWS_AS(IntMatrix::parse_text("nonsense"), ParseError);
    CHECK_THROWS_AS(IntMatrix::parse_text("1 1\n3\n7"), ParseError);
}

TEST_CASE("integer determinant") {
    CHECK(IntMatrix::identity(4).det() == Int(1));
    CHECK((IntMatrix{{2, 0}, {0, 3}}).det() == Int(6));
    CHECK((IntMatrix{{1, 2}, {2, 4}}).det() == Int(0));
    CHECK((IntMatrix{{0, 1}, {1, 0}}).det() == Int(-1));
    // against the polynomial oracle on constants
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m = random_matrix(rng, 5, -6, 6);
        PolyMatrix p(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                p.at(i, j) = IntPolynomial(std::vector<Int>{m.at(i, j)});
        IntPolynomial d = det_oracle(p);
        CHECK(m.det() == (d.is_zero() ? Int(0) : d.coeff(0)));
    }
}

TEST_CASE("polynomial arithmetic and printing") {
    IntPolynomial t = IntPolynomial::t();
    CHECK((IntPolynomial(1) - t).to_string() == "1 - t");
    CHECK((IntPolynomial(2) * t - IntPolynomial(2) * t * t).to_string() == "2t - 2t^2");
    CHECK(IntPolynomial().to_string() == "0");
    CHECK((-t).to_string() == "-t");
    CHECK((t * t).to_string() == "t^2");
    CHECK((IntPolynomial(3) + t).to_string() == "3 + t");
    CHECK((t - t).is_zero());
    CHECK((t * t * t).degree() == 3);
    CHECK(IntPolynomial(0).degree() == -1);
    IntPolynomial p = (IntPolynomial(1) - t) * (IntPolynomial(2) + t);
    CHECK(p.eval(Int(3)) == Int(-10));
    CHECK(IntPolynomial::div_exact(p, IntPolynomial(1) - t) == IntPolynomial(2) + t);
    CHECK_THROWS_AS(IntPolynomial::div_exact(t, IntPolynomial(2)), std::domain_error);
}

TEST_CASE("alexander of [[1]] is 1 - t") {
    CHECK(alexander(IntMatrix{{1}}).to_string() == "1 - t");
}

TEST_CASE("alexander frozen value 2t - 2t^2") {
    IntMatrix m{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}};
    IntPolynomial a = alexander(m);
    // frozen after checking it two independent ways: the Laplace oracle on the
    // pencil, and integer determinants of M - tM^T at t = 0, 2, 3
    CHECK(a == det_oracle(seifert_pencil(m)));
    for (long t : {0L, 2L, 3L}) {
        IntMatrix pencil(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) pencil.at(i, j) = m.at(i, j) - Int(t) * m.at(j, i);
        CHECK(pencil.det() == a.eval(Int(t)));
    }
    CHECK(a.to_string() == "2t - 2t^2");
}

TEST_CASE("alexander of odd-size matrices vanishes at t = 1") {
    std::mt19937 rng(17);
    for (std::size_t n : {1u, 3u, 5u, 7u})
        for (int trial = 0; trial < 10; ++trial)
            CHECK(alexander(random_matrix(rng, n, -5, 5)).eval(Int(1)).is_zero());
}

TEST_CASE("bareiss equals cofactor equals oracle") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-3, 3);
    for (std::size_t n : {2u, 3u, 5u, 6u})
        for (int trial = 0; trial < 6; ++trial) {
            PolyMatrix p(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    p.at(i, j) = IntPolynomial(std::vector<Int>{Int(d(rng)), Int(d(rng))});
            IntPolynomial want = det_oracle(p);
            CHECK(p.det_bareiss() == want);
            CHECK(p.det_cofactor() == want);
        }
}

TEST_SUITE_END();
