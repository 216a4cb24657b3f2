#include <doctest.h>

#include <random>

#include "grl/fixtures.hpp"
#include "grl/grl.hpp"

using namespace grl;

namespace {

// independent distance oracle: full lexicographic re-enumeration with a
// fresh generator multiply per message (no incremental updates)
int min_distance_oracle(const LinearCode& c) {
    const Field& f = c.field();
    const int n = c.n(), k = c.k();
    const std::uint32_t q = f.q();
    std::vector<std::uint32_t> msg(k, 0);
    int best = n + 1;
    while (true) {
        int pos = k - 1;
        while (pos >= 0 && msg[pos] == q - 1) {
            msg[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++msg[pos];
        int w = 0;
        for (int j = 0; j < n; ++j) {
            Elt x = 0;
            for (int i = 0; i < k; ++i) x = f.add(x, f.mul(static_cast<Elt>(msg[i]), c.gen()(i, j)));
            w += x != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

Matrix random_full_rank(const Field& f, int k, int n, std::mt19937& rng) {
    std::uniform_int_distribution<Elt> pick(0, f.q() - 1);
    while (true) {
        Matrix m(f, k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = pick(rng);
        if (rank(m) == k) return m;
    }
}

}  // namespace

TEST_CASE("dual of the dual has the original row space") {
    std::mt19937 rng(11);
    Field f = Field::make(3, 2);
    for (int it = 0; it < 10; ++it) {
        LinearCode c(random_full_rank(f, 3, 6, rng));
        CHECK(same_code(dual(dual(c)), c));
        CHECK(mat_mul(c.gen(), dual(c).gen().transpose()).is_zero());
    }
}

TEST_CASE("worked example 1: dual is a [7,5] code with dual distance 2") {
    LinearCode c = build_grl_generator(fixtures::example1_spec());
    LinearCode d = dual(c);
    CHECK(d.n() == 7);
    CHECK(d.k() == 5);
    CHECK(min_distance_exact(d) == 2);
    CHECK(min_distance_oracle(d) == 2);
}

TEST_CASE("GRS [5,2] over GF(7): dual is [5,3] MDS") {
    Field f = Field::make(7, 1);
    Matrix g = build_grs_generator(f, std::vector<Elt>{1, 2, 3, 4, 5}, std::vector<Elt>{1, 1, 1, 1, 1}, 2);
    LinearCode c((Matrix(g)));
    LinearCode d = dual(c);
    CHECK(d.k() == 3);
    CHECK(min_distance_exact(d) == 3);  // 5 - 3 + 1
    CHECK(classify(d).label == CodeLabel::MDS);
}

TEST_CASE("hermitian dual basics") {
    Field f9 = Field::make(3, 2);
    // full space: the hermitian dual is the zero code
    LinearCode full(Matrix::identity(f9, 4));
    CHECK(hermitian_dual(full).k() == 0);

    std::mt19937 rng(12);
    for (int it = 0; it < 10; ++it) {
        LinearCode c(random_full_rank(f9, 2, 5, rng));
        LinearCode hd = hermitian_dual(c);
        CHECK(mat_mul(c.gen(), hd.gen().conj_transpose()).is_zero());
        CHECK(hd.k() == 3);
        // same parameters as the Euclidean dual
        CHECK(min_distance_exact(hd) == min_distance_exact(dual(c)));
    }
}

TEST_CASE("worked example 3: hermitian and Euclidean duals share parameters") {
    LinearCode c = build_grl_generator(fixtures::example3_spec());
    CHECK(min_distance_exact(hermitian_dual(c)) == min_distance_exact(dual(c)));
}

TEST_CASE("repetition code distance") {
    Field f = Field::make(5, 1);
    Matrix g(f, 1, 6);
    for (int j = 0; j < 6; ++j) g(0, j) = 1;
    CHECK(min_distance_exact(LinearCode(std::move(g))) == 6);
}

TEST_CASE("worked example distances by full enumeration") {
    CHECK(min_distance_exact(build_grl_generator(fixtures::example1_spec())) == 5);
    CHECK(min_distance_exact(build_grl_generator(fixtures::example4_spec())) == 16);  // all 25^4 messages
}

TEST_CASE("distance budget is a hard gate") {
    LinearCode c = build_grl_generator(fixtures::example4_spec());
    CHECK_THROWS_AS(min_distance_exact(c, {1000, false}), budget_exceeded);
}

TEST_CASE("scalar-class walk gives the same distance") {
    std::mt19937 rng(13);
    for (auto [p, m] : {std::pair{3, 2}, {5, 1}, {7, 1}}) {
        Field f = Field::make(p, m);
        for (int it = 0; it < 8; ++it) {
            LinearCode c(random_full_rank(f, 3, 7, rng));
            int full = min_distance_exact(c, {100000000, false});
            int proj = min_distance_exact(c, {100000000, true});
            CHECK(full == proj);
            CHECK(full == min_distance_oracle(c));
        }
    }
}

TEST_CASE("classification labels") {
    // example 1 is NMDS [7,2,5]
    Classification c1 = classify(build_grl_generator(fixtures::example1_spec()));
    CHECK(c1.label == CodeLabel::NMDS);
    CHECK(c1.d.value == 5);
    CHECK(c1.s == 1);
    CHECK(c1.s_dual == 1);

    // GRS [5,3] over GF(7) is MDS
    Field f7 = Field::make(7, 1);
    Matrix g = build_grs_generator(f7, std::vector<Elt>{0, 1, 2, 3, 4}, std::vector<Elt>{1, 1, 1, 1, 1}, 3);
    CHECK(classify(LinearCode(std::move(g))).label == CodeLabel::MDS);

    // example 3 is NMDS [6,3,3] with dual defect 1
    Classification c3 = classify(build_grl_generator(fixtures::example3_spec()));
    CHECK(c3.label == CodeLabel::NMDS);
    CHECK(c3.d.value == 3);
    CHECK(c3.d_dual.value == 3);
}

TEST_CASE("hermitian gram and self-orthogonality") {
    LinearCode e2 = build_grl_generator(fixtures::example2_spec());
    CHECK(hermitian_gram(e2).is_zero());
    CHECK(is_hermitian_self_orthogonal(e2));

    // single row (1, a) with 1 + N(a) = 0 over GF(9): N(a) = 2
    Field f9 = Field::make(3, 2, {1, 0, 1});
    QuadExt ext = QuadExt::make(Field::make(3, 1), f9);
    Elt a = 0;
    for (Elt x = 0; x < f9.q(); ++x)
        if (ext.norm(x) == 2) {
            a = x;
            break;
        }
    Matrix g(f9, 1, 2);
    g(0, 0) = 1;
    g(0, 1) = a;
    LinearCode tiny(std::move(g));
    CHECK(hermitian_gram(tiny).is_zero());
    CHECK(is_hermitian_self_orthogonal(tiny));

    // identity generator is never self-orthogonal
    CHECK(!is_hermitian_self_orthogonal(LinearCode(Matrix::identity(f9, 3))));
}

TEST_CASE("self-orthogonality equals containment in the hermitian dual") {
    std::mt19937 rng(14);
    Field f9 = Field::make(3, 2);
    for (int it = 0; it < 200; ++it) {
        LinearCode c(random_full_rank(f9, 2, 6, rng));
        LinearCode hd = hermitian_dual(c);
        // containment via rank: C subset of C^perp_h iff stacking adds nothing
        Matrix stacked(f9, hd.k() + c.k(), c.n());
        for (int r = 0; r < hd.k(); ++r)
            for (int j = 0; j < c.n(); ++j) stacked(r, j) = hd.gen()(r, j);
        for (int r = 0; r < c.k(); ++r)
            for (int j = 0; j < c.n(); ++j) stacked(hd.k() + r, j) = c.gen()(r, j);
        bool contained = rank(stacked) == hd.k();
        CHECK(is_hermitian_self_orthogonal(c) == contained);
    }
    // every worked-example fixture agrees
    for (const auto& ex : fixtures::worked_examples()) {
        LinearCode c = build_grl_generator(ex.spec);
        CHECK(is_hermitian_self_orthogonal(c) == ex.hso_expected);
    }
}

TEST_CASE("classification from certificates") {
    Classification c = classification_from(20, 4, {16, Evidence::certified}, {4, Evidence::certified});
    CHECK(c.label == CodeLabel::NMDS);
    CHECK(c.s == 1);
    CHECK(c.s_dual == 1);
    CHECK(c.d.evidence == Evidence::certified);
}

TEST_CASE("zero code and full code edges") {
    Field f = Field::make(3, 1);
    LinearCode full(Matrix::identity(f, 3));
    LinearCode zero = dual(full);
    CHECK(zero.k() == 0);
    CHECK_THROWS_AS(min_distance_exact(zero), std::invalid_argument);
    CHECK_THROWS_AS(classify(full), std::invalid_argument);
}
