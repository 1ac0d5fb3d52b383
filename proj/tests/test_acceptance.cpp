// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with its runtime. Run directly or through ctest.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "brunnian/alternation.hpp"
#include "brunnian/block_form.hpp"
#include "brunnian/polynomial.hpp"
#include "brunnian/realizability.hpp"
#include "brunnian/s_equivalence.hpp"
#include "brunnian/sequences.hpp"
#include "brunnian/sublinks.hpp"

using namespace brunnian;

namespace {

struct Criterion {
    const char* label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool passed = false;
    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("acceptance %-38s %s  (%.2fs)\n", label, passed ? "PASS" : "FAIL", secs);
        std::fflush(stdout);
    }
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

const std::set<AltTuple> kTriples = {
    {0, 0, 0}, {0, 0, 1}, {0, -1, 0}, {1, 0, 0}, {1, 1, 1}, {1, 0, 1}};

const std::set<AltTuple> kSixTuples = {
    {0, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 1},   {0, 0, 0, 0, -1, 0},  {0, 0, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, 0},  {0, 0, 1, 0, 0, 1},   {0, 0, 1, 0, 1, 1},   {0, 0, 1, 1, 1, 1},
    {0, -1, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 1},  {0, -1, 0, -1, 0, 1}, {0, -1, 0, -1, -1, 0},
    {1, 0, 0, 0, 0, 0},  {1, 0, 0, 0, 0, 1},   {1, 0, 0, 0, -1, 0},  {1, 0, 0, -1, -1, 0},
    {1, 1, 1, 0, 0, 0},  {1, 1, 1, 0, 0, 1},   {1, 1, 1, 1, 1, 1},   {1, 1, 1, 1, 0, 0},
    {1, 0, 1, 0, 0, 0},  {1, 0, 1, 0, 0, 1},   {1, 0, 1, 0, 1, 1},   {1, 0, 1, -1, 0, 1}};

// Independent oracle for criterion 8: Laplace expansion along the first
// column, written from scratch against the public polynomial type.
IntPolynomial laplace_det(const std::vector<std::vector<IntPolynomial>>& a) {
    std::size_t n = a.size();
    if (n == 0) return IntPolynomial(1);
    if (n == 1) return a[0][0];
    IntPolynomial acc;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][0].is_zero()) continue;
        std::vector<std::vector<IntPolynomial>> minor;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(a[r].begin() + 1, a[r].end());
        }
        IntPolynomial term = a[i][0] * laplace_det(minor);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

IntPolynomial oracle_pencil_det(const IntMatrix& m) {
    std::size_t n = m.rows();
    std::vector<std::vector<IntPolynomial>> a(n, std::vector<IntPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = IntPolynomial(std::vector<Int>{m.at(i, j), -m.at(j, i)});
    return laplace_det(a);
}

std::vector<AltTuple> all_small_tuples(int k) {
    std::size_t len = static_cast<std::size_t>(k) * (k - 1) / 2;
    std::vector<AltTuple> out;
    AltTuple t(len, -1);
    while (true) {
        out.push_back(t);
        std::size_t p = 0;
        while (p < len && t[p] == 1) t[p++] = -1;
        if (p == len) break;
        ++t[p];
    }
    return out;
}

IntMatrix random_square(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("criterion 1: size-2 enumeration") {
    Criterion c{"1 size-2 enumeration"};
    std::set<AltTuple> want = {{0}, {1}};
    REQUIRE(enumerate_sequence_engine(2) == want);
    REQUIRE(enumerate_constraint_engine(2) == want);
    REQUIRE(enumerate_chord_engine(2) == want);
    CHECK(c.elapsed() < 1.0);
    c.passed = true;
}

TEST_CASE("criterion 2: size-3 enumeration, three engines") {
    Criterion c{"2 size-3 enumeration x3 engines"};
    REQUIRE(enumerate_sequence_engine(3) == kTriples);
    REQUIRE(enumerate_constraint_engine(3) == kTriples);
    REQUIRE(enumerate_chord_engine(3) == kTriples);
    CHECK(c.elapsed() < 1.0);
    c.passed = true;
}

TEST_CASE("criterion 3: size-4 enumeration and superset") {
    Criterion c{"3 size-4 enumeration + superset"};
    REQUIRE(enumerate_sequence_engine(4) == kSixTuples);
    REQUIRE(enumerate_chord_engine(4) == kSixTuples);
    auto con = enumerate_constraint_engine(4);
    REQUIRE(std::includes(con.begin(), con.end(), kSixTuples.begin(), kSixTuples.end()));
    for (const auto& t : con)
        if (!kSixTuples.count(t))
            std::printf("  criterion 3 note: constraint surplus %s\n", tuple_to_string(t).c_str());
    CHECK(c.elapsed() < 10.0);
    c.passed = true;
}

TEST_CASE("criterion 4: modulus-3 set expansions verbatim") {
    Criterion c{"4 modulus-3 expansions"};
    auto mk = [](int m, std::initializer_list<std::vector<int>> es) {
        std::vector<Seq> out;
        for (const auto& e : es) out.emplace_back(m, e);
        return out;
    };
    REQUIRE(extend_set({Seq(2, {0})}, 3) ==
            mk(3, {{0}, {2}, {0, 2}, {0, 1}, {0, 0, 1}, {0, 0, 0}}));
    REQUIRE(extend_set({Seq(2, {1})}, 3) ==
            mk(3, {{0}, {2}, {1, 2}, {1, 1}, {1, 2, 1}, {1, 2, 0}}));
    REQUIRE(class_representatives(extend_set({Seq(2, {0})}, 3)) == mk(3, {{0}, {2}, {0, 1}}));
    REQUIRE(class_representatives(extend_set({Seq(2, {1})}, 3)) == mk(3, {{0}, {2}, {1, 2}}));
    CHECK(c.elapsed() < 1.0);
    c.passed = true;
}

TEST_CASE("criterion 5: G base cases") {
    Criterion c{"5 G base cases"};
    REQUIRE(g2(parity_class(Seq(2, {0}))) == std::vector<int>{0});
    REQUIRE(g2(parity_class(Seq(2, {1}))) == std::vector<int>{1});
    c.passed = true;
}

TEST_CASE("criterion 6: block-form gate") {
    Criterion c{"6 block-form gate"};
    for (long h = -10; h <= 10; ++h) {
        SeifertBlock2 m1 = decompose_block2(IntMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, h}});
        REQUIRE(m1.E.signs == std::vector<int>{1, 1});
        REQUIRE(m1.H == IntMatrix{{h}});
        SeifertBlock2 m2 = decompose_block2(IntMatrix{{1, 0, 1}, {0, -1, 1}, {0, 0, h}});
        REQUIRE(m2.E.signs == std::vector<int>{1, -1});
        SeifertBlock2 m3 = decompose_block2(IntMatrix{{-1, 0, 1}, {0, -1, 1}, {0, 0, h}});
        REQUIRE(m3.E.signs == std::vector<int>{-1, -1});
        REQUIRE(check_matrix(IntMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, h}}).realizable);
    }
    for (const IntMatrix& base :
         {IntMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 5}}, IntMatrix{{1, 0, 1}, {0, -1, 1}, {0, 0, 5}},
          IntMatrix{{-1, 0, 1}, {0, -1, 1}, {0, 0, 5}}}) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                if (i == 2 && j == 2) continue;
                IntMatrix bad = base;
                bad.at(i, j) += 1;
                REQUIRE_THROWS_AS(decompose_block2(bad), NotBlockForm);
            }
    }
    c.passed = true;
}

TEST_CASE("criterion 7: algebraic invariants on 200 random matrices") {
    Criterion c{"7 algebraic invariants"};
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> size_pick(0, 3), entry(-5, 5), pick3(0, 2), coin(0, 1);
    const long points[3] = {-1, 2, 3};
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + 2 * size_pick(rng);  // 1, 3, 5, 7
        IntMatrix m = random_square(rng, n, -5, 5);
        IntPolynomial a0 = alexander(m);
        REQUIRE(a0.eval(Int(1)).is_zero());

        // unimodular congruence: invariant up to one global sign
        IntMatrix u = IntMatrix::identity(n);
        for (int step = 0; step < 5; ++step) {
            IntMatrix e = IntMatrix::identity(n);
            std::uniform_int_distribution<std::size_t> idx(0, n - 1);
            std::size_t r = idx(rng), s = idx(rng);
            if (r == s)
                e.at(r, r) = coin(rng) ? 1 : -1;
            else
                e.at(r, s) = entry(rng);
            u = u * e;
        }
        IntPolynomial ac = alexander(s_equiv_congruence(m, u));
        bool plus = true, minus = true;
        for (long x : points) {
            plus = plus && ac.eval(Int(x)) == a0.eval(Int(x));
            minus = minus && ac.eval(Int(x)) == -a0.eval(Int(x));
        }
        REQUIRE((plus || minus));

        // enlargement: invariant up to a unit +-t^k
        std::vector<Int> border(n);
        for (auto& v : border) v = entry(rng);
        IntPolynomial ae = alexander(
            s_equiv_enlarge(m, coin(rng) ? EnlargeKind::Row : EnlargeKind::Column, border));
        bool any_unit = false;
        for (int sgn = -1; sgn <= 1 && !any_unit; sgn += 2)
            for (int k = 0; k <= 2 && !any_unit; ++k) {
                bool all = true;
                for (long x : points) {
                    Int xv(x), xk(1);
                    for (int q = 0; q < k; ++q) xk *= xv;
                    Int want = (sgn < 0 ? -Int(1) : Int(1)) * xk * a0.eval(xv);
                    all = all && ae.eval(xv) == want;
                }
                any_unit = all;
            }
        REQUIRE(any_unit);
    }
    CHECK(c.elapsed() < 10.0);
    c.passed = true;
}

TEST_CASE("criterion 8: sublink verdicts vs independent oracle") {
    Criterion c{"8 sublink oracle equivalence"};
    auto check_form = [&](const MultiBlockForm& f) {
        SublinkReport rep = sublink_vanishing(f);
        std::size_t checked = 0;
        for (const auto& e : rep.entries) {
            IntPolynomial want = oracle_pencil_det(compose_multi(restrict_parts(f, e.subset)));
            REQUIRE(e.det == want);
            REQUIRE(e.vanishes == want.is_zero());
            ++checked;
        }
        std::size_t k = f.num_parts();
        REQUIRE(checked == (std::size_t{1} << k) - 2);
    };
    // exhaustive over parts [2,2] with all block entries in {-1,0,1}
    for (long h1 = -1; h1 <= 1; ++h1)
        for (long h2 = -1; h2 <= 1; ++h2)
            for (long p12 = -1; p12 <= 1; ++p12)
                for (long p21 = -1; p21 <= 1; ++p21)
                    check_form(make_multi_block(
                        {2, 2}, {IntMatrix{{h1}}, IntMatrix{{h2}}},
                        {{IntMatrix(), IntMatrix{{p12}}}, {IntMatrix{{p21}}, IntMatrix()}}));
    // 100 random parts [2,2,2] instances
    std::mt19937 rng(103);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<IntMatrix> hb{IntMatrix{{entry(rng)}}, IntMatrix{{entry(rng)}},
                                  IntMatrix{{entry(rng)}}};
        std::vector<std::vector<IntMatrix>> pb(3, std::vector<IntMatrix>(3));
        for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m)
                if (l != m) pb[l][m] = IntMatrix{{entry(rng)}};
        check_form(make_multi_block({2, 2, 2}, std::move(hb), std::move(pb)));
    }
    CHECK(c.elapsed() < 60.0);
    c.passed = true;
}

TEST_CASE("criterion 9: witness soundness and completeness, k <= 4") {
    Criterion c{"9 witness soundness k<=4"};
    for (int k = 2; k <= 4; ++k) {
        auto realizable = enumerate_sequence_engine(k);
        for (const AltTuple& t : all_small_tuples(k)) {
            Verdict v = witness_search(tuple_to_table(t));
            REQUIRE(v.realizable == (realizable.count(t) != 0));
            if (v.realizable) {
                REQUIRE(v.witness.size() == static_cast<std::size_t>(k) - 1);
                XHistory h = g_full(v.witness);
                AltTuple got;
                for (const auto& col : h.columns) got.insert(got.end(), col.begin(), col.end());
                REQUIRE(got == t);
            }
        }
    }
    CHECK(c.elapsed() < 30.0);
    c.passed = true;
}

TEST_CASE("criterion 10: construction-plan round trip, 500 forms") {
    Criterion c{"10 plan round trip x500"};
    std::mt19937 rng(107);
    std::uniform_int_distribution<int> upper(-9, 9), diag(-10, 10), coin(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        int k = 1 + trial % 5;  // H is k x k
        AltTuple tuple;
        if (k >= 2) {
            auto pool = enumerate_sequence_engine(k);
            std::uniform_int_distribution<std::size_t> pickd(0, pool.size() - 1);
            auto it = pool.begin();
            std::advance(it, pickd(rng));
            tuple = *it;
        }
        IntMatrix h(k, k);
        std::size_t p = 0;
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                long u = upper(rng);
                h.at(i, j) = u;
                h.at(j, i) = u - tuple[p++];
            }
        for (int i = 0; i < k; ++i) h.at(i, i) = diag(rng);
        std::vector<int> signs(k + 1);
        for (auto& s : signs) s = coin(rng) ? 1 : -1;
        SeifertBlock2 b(SignDiagonal(signs), std::move(h));
        ConstructionPlan plan = construction_plan(b);
        REQUIRE(plan_to_matrix(plan) == b);
        // the twist formula, verbatim: h_{i-1,i-1} + 6 - sum_j h_{j,i-1}
        for (const auto& st : plan.steps) {
            std::size_t col = st.clasp - 2;
            Int expect = b.H.at(col, col) + Int(6);
            for (std::size_t r = 0; r < col; ++r) expect -= b.H.at(r, col);
            REQUIRE(st.twist == expect);
        }
    }
    CHECK(c.elapsed() < 5.0);
    c.passed = true;
}

TEST_CASE("criterion 11: trace test, exhaustive to length 6") {
    Criterion c{"11 trace test exhaustive"};
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> signs(n);
            long sum = 0;
            for (std::size_t i = 0; i < n; ++i) {
                signs[i] = (mask >> i) & 1 ? 1 : -1;
                sum += signs[i];
            }
            SeifertBlock2 b(SignDiagonal(signs), IntMatrix(n - 1, n - 1));
            REQUIRE(trace_split_test(b) == (sum == 0));
        }
    }
    c.passed = true;
}
