#include <doctest.h>

#include <random>
#include <sstream>

#include "grl/linalg.hpp"

using namespace grl;

namespace {

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<Elt> pick(0, f.q() - 1);
    Matrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = pick(rng);
    return m;
}

// independent oracle: cofactor expansion along the first row
Elt det_laplace(const Matrix& m) {
    const Field& f = m.field();
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Elt acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix minor(f, n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Elt term = f.mul(m(0, j), det_laplace(minor));
        acc = j % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

}  // namespace

TEST_CASE("identity is neutral for multiplication") {
    Field f = Field::make(7, 1);
    std::mt19937 rng(1);
    Matrix a = random_matrix(f, 3, 5, rng);
    CHECK(mat_mul(Matrix::identity(f, 3), a) == a);
}

TEST_CASE("product against a naive triple loop") {
    Field f = Field::make(5, 2);
    std::mt19937 rng(2);
    for (int it = 0; it < 20; ++it) {
        Matrix a = random_matrix(f, 3, 3, rng);
        Matrix b = random_matrix(f, 3, 3, rng);
        Matrix c = mat_mul(a, b);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Elt s = 0;
                for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
                CHECK(c(i, j) == s);
            }
    }
}

TEST_CASE("shape and field mismatches are rejected") {
    Field f = Field::make(3, 1);
    Matrix a(f, 2, 3), b(f, 2, 3);
    CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);
    Matrix c(Field::make(5, 1), 3, 2);
    CHECK_THROWS_AS(mat_mul(a, c), std::invalid_argument);
    CHECK_THROWS_AS(det(a), std::invalid_argument);
}

TEST_CASE("Vandermonde determinant on distinct points is nonzero") {
    Field f = Field::make(3, 2);
    std::vector<Elt> pts = {0, 1, 3, 5};
    Matrix v(f, 4, 4);
    for (int i = 0; i < 4; ++i) {
        Elt cur = 1;
        for (int j = 0; j < 4; ++j) {
            v(i, j) = cur;
            cur = f.mul(cur, pts[i]);
        }
    }
    CHECK(det(v) != 0);
}

TEST_CASE("elimination determinant equals Laplace expansion") {
    std::mt19937 rng(3);
    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {5, 1}, {3, 2}, {5, 2}}) {
        Field f = Field::make(p, m);
        for (int n = 1; n <= 5; ++n) {
            for (int it = 0; it < 8; ++it) {
                Matrix a = random_matrix(f, n, n, rng);
                CHECK(det(a) == det_laplace(a));
            }
        }
    }
}

TEST_CASE("rank-nullity on random matrices") {
    Field f = Field::make(5, 1);
    std::mt19937 rng(4);
    for (int it = 0; it < 25; ++it) {
        Matrix a = random_matrix(f, 4, 7, rng);
        Matrix k = right_kernel(a);
        CHECK(rank(a) + rank(k) == 7);
        CHECK(k.rows() == 7 - rank(a));
        // A * transpose(kernel basis) = 0
        CHECK(mat_mul(a, k.transpose()).is_zero());
    }
}

TEST_CASE("rref is idempotent") {
    Field f = Field::make(3, 2);
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        Matrix a = random_matrix(f, 4, 6, rng);
        CHECK(rref(rref(a)) == rref(a));
    }
}

TEST_CASE("conjugate transpose") {
    Field f49 = Field::make(7, 2);
    CHECK(Matrix::identity(f49, 3).conj_transpose() == Matrix::identity(f49, 3));
    std::mt19937 rng(6);
    Matrix a = random_matrix(f49, 3, 4, rng);
    Matrix ct = a.conj_transpose();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) CHECK(ct(i, j) == f49.conj(a(j, i)));
    CHECK(ct.conj_transpose() == a);
}

TEST_CASE("matrix inverse") {
    Field f = Field::make(3, 2);
    std::mt19937 rng(7);
    for (int it = 0; it < 30; ++it) {
        Matrix a = random_matrix(f, 3, 3, rng);
        if (det(a) == 0) {
            CHECK_THROWS_AS(inverse(a), std::invalid_argument);
            continue;
        }
        CHECK(mat_mul(a, inverse(a)) == Matrix::identity(f, 3));
    }
}

TEST_CASE("rank scanner agrees with plain rank on column subsets") {
    Field f = Field::make(5, 1);
    std::mt19937 rng(8);
    Matrix a = random_matrix(f, 4, 8, rng);
    RankScanner scan(a);
    std::uniform_int_distribution<int> pick(0, 7);
    for (int it = 0; it < 50; ++it) {
        std::vector<int> cols;
        for (int j = 0; j < 4; ++j) cols.push_back(pick(rng));
        CHECK(scan.rank_of_columns(cols) == rank(a.submatrix_columns(cols)));
    }
}

TEST_CASE("GFMAT round-trip is bit exact") {
    std::mt19937 rng(9);
    for (auto [p, m] : {std::pair{3, 2}, {2, 4}, {7, 1}}) {
        Field f = Field::make(p, m);
        Matrix a = random_matrix(f, 3, 5, rng);
        std::ostringstream os;
        write_gfmat(os, a);
        std::istringstream is(os.str());
        Matrix b = read_gfmat(is);
        CHECK(a == b);
        std::ostringstream os2;
        write_gfmat(os2, b);
        CHECK(os.str() == os2.str());
    }
}

TEST_CASE("GFMAT rejects malformed input") {
    std::istringstream bad1("GFMAT v2\n3 1 0 1 1 1\n0\n");
    CHECK_THROWS_AS(read_gfmat(bad1), std::invalid_argument);
    std::istringstream bad2("GFMAT v1\n3 1 0 1 1 1\n7\n");  // entry out of range
    CHECK_THROWS_AS(read_gfmat(bad2), std::invalid_argument);
}
