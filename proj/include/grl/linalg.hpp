#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "grl/field.hpp"

namespace grl {

/// Dense row-major matrix over one finite field. Matrices are immutable
/// values in spirit: all operations return fresh matrices.
class Matrix {
public:
    Matrix(Field f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Matrix identity(const Field& f, int n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<Elt>>& rows);

    const Field& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elt operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Elt& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    std::span<const Elt> row(int r) const { return {a_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }

    bool operator==(const Matrix& o) const { return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Matrix transpose() const;
    /// Entrywise conjugate of the transpose; requires a field of even degree.
    Matrix conj_transpose() const;
    Matrix submatrix_columns(std::span<const int> cols) const;

private:
    Field f_;
    int rows_, cols_;
    std::vector<Elt> a_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);

int rank(const Matrix& a);
Elt det(const Matrix& a);  // throws on non-square
Matrix rref(const Matrix& a);
/// Rows form a basis of the right kernel {x : A x = 0}; (cols - rank) rows.
Matrix right_kernel(const Matrix& a);
Matrix inverse(const Matrix& a);  // throws on singular or non-square

/// Reusable scratch for scanning ranks of many column subsets of one matrix.
class RankScanner {
public:
    explicit RankScanner(const Matrix& m) : m_(&m), scratch_(static_cast<size_t>(m.rows()) * m.rows()) {}
    int rank_of_columns(std::span<const int> cols);

private:
    const Matrix* m_;
    std::vector<Elt> scratch_;
};

/// GFMAT v1 text format: "GFMAT v1" line, then a header "p m c0 .. cm rows
/// cols" (modulus coefficients low-to-high), then one line of element
/// indices per row. Round-trips bit-exactly.
void write_gfmat(std::ostream& os, const Matrix& m);
Matrix read_gfmat(std::istream& is);

}  // namespace grl
