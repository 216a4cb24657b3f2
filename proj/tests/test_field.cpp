#include <doctest.h>

#include <random>
#include <set>

#include "grl/field.hpp"

using namespace grl;

TEST_CASE("deterministic modulus search") {
    CHECK(Field::make(3, 1).modulus() == std::vector<int>{0, 1});  // GF(3): modulus x
    CHECK(Field::make(3, 2).modulus() == std::vector<int>{1, 0, 1});   // w^2 = -1
    CHECK(Field::make(5, 2).modulus() == std::vector<int>{2, 0, 1});   // w^2 = -2
    CHECK(Field::make(2, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(Field::make(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1});
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);   // non-prime p
    CHECK_THROWS_AS(Field::make(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 0), std::invalid_argument);   // m < 1
    CHECK_THROWS_AS(Field::make(2, 21), std::invalid_argument);  // order cap
    CHECK_THROWS_AS(Field::make(3, 2, {1, 1}), std::invalid_argument);        // wrong degree
    CHECK_THROWS_AS(Field::make(5, 2, {4, 0, 1}), std::invalid_argument);     // x^2+4 = (x-1)(x+1)
}

TEST_CASE("modulus override reproduces fixed defining relations") {
    Field f9 = Field::make(3, 2, {1, 0, 1});
    Elt w = 3;  // the polynomial "x"
    CHECK(f9.mul(w, w) == 2);  // w^2 = -1 = 2

    Field f25 = Field::make(5, 2, {2, 0, 1});
    Elt z = 5;
    CHECK(f25.mul(z, z) == 3);  // z^2 = -2 = 3
}

TEST_CASE("field handles share tables and compare by identity") {
    Field a = Field::make(3, 2);
    Field b = Field::make(3, 2);
    Field c = Field::make(3, 2, {1, 0, 1});  // same as the deterministic one
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a != Field::make(5, 1));
}

TEST_CASE("basic arithmetic laws") {
    Field f = Field::make(5, 2);
    for (Elt a = 0; a < f.q(); ++a) {
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, 0) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);  // exhaustive inverse law
    }
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);

    // spot-checked associativity/distributivity on random triples
    std::mt19937 rng(12345);
    std::uniform_int_distribution<Elt> pick(0, f.q() - 1);
    for (int it = 0; it < 300; ++it) {
        Elt a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST_CASE("field axioms exhaustively for small orders") {
    for (auto [p, m] : {std::pair{2, 2}, {3, 1}, {3, 2}, {7, 1}}) {
        Field f = Field::make(p, m);
        for (Elt a = 1; a < f.q(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
        std::mt19937 rng(99);
        std::uniform_int_distribution<Elt> pick(0, f.q() - 1);
        for (int it = 0; it < 100; ++it) {
            Elt a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    }
}

TEST_CASE("checked elements detect spec mismatch") {
    Field f9 = Field::make(3, 2);
    Field f25 = Field::make(5, 2);
    FqElem a{f9, 3}, b{f9, 4}, c{f25, 3};
    CHECK(a + b == FqElem{f9, f9.add(3, 4)});
    CHECK(a != c);  // different spec, never equal
    CHECK_THROWS_AS((void)(a + c), std::invalid_argument);
}

TEST_CASE("conjugation over GF(9)") {
    Field f9 = Field::make(3, 2, {1, 0, 1});
    QuadExt ext = QuadExt::make(Field::make(3, 1), f9);
    Elt w = 3;
    CHECK(ext.conj(w) == f9.mul(2, w));  // w^3 = -w = 2w
    CHECK(ext.conj(1) == 1);
}

TEST_CASE("conjugation is an involutive automorphism fixing the base") {
    QuadExt ext = QuadExt::make(Field::make(5, 1));
    const Field& f = ext.ext();
    int fixed = 0;
    for (Elt x = 0; x < f.q(); ++x) {
        CHECK(ext.conj(ext.conj(x)) == x);
        if (ext.conj(x) == x) {
            ++fixed;
            CHECK(ext.project(x).has_value());
        }
    }
    CHECK(fixed == 5);
    std::mt19937 rng(7);
    std::uniform_int_distribution<Elt> pick(0, f.q() - 1);
    for (int it = 0; it < 200; ++it) {
        Elt x = pick(rng), y = pick(rng);
        CHECK(ext.conj(f.mul(x, y)) == f.mul(ext.conj(x), ext.conj(y)));
        CHECK(ext.conj(f.add(x, y)) == f.add(ext.conj(x), ext.conj(y)));
    }
}

TEST_CASE("norm values and preimage counts") {
    QuadExt e9 = QuadExt::make(Field::make(3, 1), Field::make(3, 2, {1, 0, 1}));
    Elt one_plus_w = 4;
    CHECK(e9.norm(one_plus_w) == 2);  // N(1+w) = 2
    CHECK(e9.norm(0) == 0);
    CHECK(e9.norm(1) == 1);

    QuadExt e25 = QuadExt::make(Field::make(5, 1));
    std::vector<int> count(5, 0);
    for (Elt x = 0; x < e25.ext().q(); ++x) ++count[e25.norm(x)];
    CHECK(count[0] == 1);
    for (int c = 1; c < 5; ++c) CHECK(count[c] == 6);  // q+1 preimages per unit

    // norm multiplicativity, exhaustively
    const Field& f = e25.ext();
    for (Elt x = 0; x < f.q(); ++x)
        for (Elt y = 0; y < f.q(); ++y)
            CHECK(e25.norm(f.mul(x, y)) == e25.base().mul(e25.norm(x), e25.norm(y)));
}

TEST_CASE("norm equation solving") {
    QuadExt e25 = QuadExt::make(Field::make(5, 1));
    CHECK(e25.norm(e25.solve_norm_equation(1)) == 1);
    for (Elt c = 1; c < 5; ++c) {
        Elt beta = e25.solve_norm_equation(c);
        CHECK(e25.ext().pow(beta, 6) == e25.embed(c));
        // minimality: no smaller index has the same norm
        for (Elt x = 0; x < beta; ++x) CHECK(e25.norm(x) != c);
    }
    CHECK_THROWS_AS(e25.solve_norm_equation(0), std::invalid_argument);
}

TEST_CASE("unity subgroup") {
    QuadExt e25 = QuadExt::make(Field::make(5, 1));
    const auto& u6 = e25.unity_subgroup();
    CHECK(u6.size() == 6);
    // {1, 2+w, 2-w, 3+w, 3-w, 4} with w^2 = -2
    CHECK(std::set<Elt>(u6.begin(), u6.end()) == std::set<Elt>{1, 7, 22, 8, 23, 4});
    CHECK(u6[0] == 1);
    CHECK(e25.unity_generator() == 8);  // 3+w, the least primitive 6th root
    for (Elt x : u6) CHECK(e25.norm(x) == 1);
    // closed under multiplication
    for (Elt x : u6)
        for (Elt y : u6) CHECK(std::count(u6.begin(), u6.end(), e25.ext().mul(x, y)) == 1);

    QuadExt e9 = QuadExt::make(Field::make(3, 1));
    CHECK(e9.unity_subgroup().size() == 4);
    for (Elt x : e9.unity_subgroup()) CHECK(e9.norm(x) == 1);
}

TEST_CASE("coset representatives") {
    QuadExt e25 = QuadExt::make(Field::make(5, 1));
    const auto& reps = e25.coset_representatives();
    CHECK(reps.size() == 6);
    CHECK(reps[0] == 1);
    CHECK(reps[1] == 5);  // z itself leads the second coset
    const Field& f = e25.ext();
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j) {
            Elt ratio = f.div(reps[i], reps[j]);
            CHECK(!e25.project(ratio).has_value());  // never in GF(q)*
        }

    QuadExt e9 = QuadExt::make(Field::make(3, 1));
    CHECK(e9.coset_representatives().size() == 4);
    std::set<Elt> covered;
    for (Elt r : e9.coset_representatives())
        for (Elt u = 1; u < 3; ++u) covered.insert(e9.ext().mul(r, e9.embed(u)));
    CHECK(covered.size() == 8);
}

TEST_CASE("embedding is a field homomorphism") {
    QuadExt ext = QuadExt::make(Field::make(3, 2));  // GF(81)/GF(9)
    const Field& b = ext.base();
    for (Elt x = 0; x < b.q(); ++x) {
        CHECK(ext.conj(ext.embed(x)) == ext.embed(x));  // base is fixed by conj
        for (Elt y = 0; y < b.q(); ++y) {
            CHECK(ext.embed(b.add(x, y)) == ext.ext().add(ext.embed(x), ext.embed(y)));
            CHECK(ext.embed(b.mul(x, y)) == ext.ext().mul(ext.embed(x), ext.embed(y)));
        }
    }
    // conj fixes exactly the embedded base field (q^2 <= 6561)
    int fixed = 0;
    for (Elt x = 0; x < ext.ext().q(); ++x)
        if (ext.conj(x) == x) {
            ++fixed;
            CHECK(ext.project(x).has_value());
        }
    CHECK(fixed == 9);
}

TEST_CASE("norm multiplicativity at the largest test order is randomized") {
    QuadExt ext = QuadExt::make(Field::make(3, 2));
    const Field& f = ext.ext();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<Elt> pick(0, f.q() - 1);
    for (int it = 0; it < 2000; ++it) {
        Elt x = pick(rng), y = pick(rng);
        CHECK(ext.norm(f.mul(x, y)) == ext.base().mul(ext.norm(x), ext.norm(y)));
    }
}

TEST_CASE("pow handles negative exponents and identities") {
    Field f = Field::make(7, 1);
    for (Elt a = 1; a < 7; ++a) {
        CHECK(f.pow(a, -1) == f.inv(a));
        CHECK(f.pow(a, 0) == 1);
        CHECK(f.pow(a, 6) == 1);
    }
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
}
