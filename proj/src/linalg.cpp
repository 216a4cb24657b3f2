#include "grl/linalg.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace grl {

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Elt>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) {
            if (rows[i][j] >= f.q()) throw std::invalid_argument("element index out of range");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

bool Matrix::is_zero() const {
    for (Elt x : a_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(f_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj_transpose() const {
    Matrix t(f_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = f_.conj((*this)(r, c));
    return t;
}

Matrix Matrix::submatrix_columns(std::span<const int> cols) const {
    Matrix s(f_, rows_, static_cast<int>(cols.size()));
    for (int r = 0; r < rows_; ++r)
        for (size_t j = 0; j < cols.size(); ++j) s(r, static_cast<int>(j)) = (*this)(r, cols[j]);
    return s;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("matrix field mismatch");
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            Elt aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    }
    return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("matrix field mismatch");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    const Field& f = a.field();
    Matrix c(f, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
    return c;
}

namespace {

// In-place elimination to row echelon form. Pivot rule: first nonzero entry
// in column order. Returns pivot columns; det_acc (if given) accumulates the
// determinant of the row-reduced square input.
std::vector<int> echelonize(const Field& f, std::vector<Elt>& a, int rows, int cols, Elt* det_acc) {
    std::vector<int> pivots;
    int r = 0;
    if (det_acc) *det_acc = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (a[static_cast<size_t>(i) * cols + c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = c; j < cols; ++j) std::swap(a[static_cast<size_t>(pr) * cols + j], a[static_cast<size_t>(r) * cols + j]);
            if (det_acc) *det_acc = f.neg(*det_acc);
        }
        Elt piv = a[static_cast<size_t>(r) * cols + c];
        if (det_acc) *det_acc = f.mul(*det_acc, piv);
        Elt ipiv = f.inv(piv);
        for (int j = c; j < cols; ++j) {
            auto& x = a[static_cast<size_t>(r) * cols + j];
            x = f.mul(x, ipiv);
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Elt factor = a[static_cast<size_t>(i) * cols + c];
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j) {
                auto& x = a[static_cast<size_t>(i) * cols + j];
                x = f.sub(x, f.mul(factor, a[static_cast<size_t>(r) * cols + j]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const Matrix& a) {
    std::vector<Elt> buf(a.rows() * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) buf[static_cast<size_t>(i) * a.cols() + j] = a(i, j);
    return static_cast<int>(echelonize(a.field(), buf, a.rows(), a.cols(), nullptr).size());
}

Elt det(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (a.rows() == 0) return 1;
    std::vector<Elt> buf(a.rows() * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) buf[static_cast<size_t>(i) * a.cols() + j] = a(i, j);
    Elt d = 1;
    auto pivots = echelonize(a.field(), buf, a.rows(), a.cols(), &d);
    if (static_cast<int>(pivots.size()) < a.rows()) return 0;
    return d;
}

Matrix rref(const Matrix& a) {
    std::vector<Elt> buf(a.rows() * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) buf[static_cast<size_t>(i) * a.cols() + j] = a(i, j);
    echelonize(a.field(), buf, a.rows(), a.cols(), nullptr);
    Matrix r(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = buf[static_cast<size_t>(i) * a.cols() + j];
    return r;
}

Matrix right_kernel(const Matrix& a) {
    const Field& f = a.field();
    std::vector<Elt> buf(a.rows() * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) buf[static_cast<size_t>(i) * a.cols() + j] = a(i, j);
    auto pivots = echelonize(f, buf, a.rows(), a.cols(), nullptr);
    std::vector<char> is_pivot(a.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;

    std::vector<int> free_cols;
    for (int c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix k(f, static_cast<int>(free_cols.size()), a.cols());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        k(static_cast<int>(fi), fc) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            // reduced form: pivot row pi reads x_{pivot} = -sum coeff * x_free
            Elt coeff = buf[pi * a.cols() + fc];
            k(static_cast<int>(fi), pivots[pi]) = f.neg(coeff);
        }
    }
    return k;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const Field& f = a.field();
    int n = a.rows();
    std::vector<Elt> buf(static_cast<size_t>(n) * 2 * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) buf[static_cast<size_t>(i) * 2 * n + j] = a(i, j);
        buf[static_cast<size_t>(i) * 2 * n + n + i] = 1;
    }
    auto pivots = echelonize(f, buf, n, 2 * n, nullptr);
    if (static_cast<int>(pivots.size()) != n || pivots.back() >= n) throw std::invalid_argument("matrix is singular");
    Matrix inv(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = buf[static_cast<size_t>(i) * 2 * n + n + j];
    return inv;
}

int RankScanner::rank_of_columns(std::span<const int> cols) {
    const Matrix& m = *m_;
    const Field& f = m.field();
    const int rows = m.rows();
    const int nc = static_cast<int>(cols.size());
    // column-count never exceeds rows+? rank <= min(rows, nc); scratch is rows x nc
    scratch_.assign(static_cast<size_t>(rows) * nc, 0);
    for (int r = 0; r < rows; ++r)
        for (int j = 0; j < nc; ++j) scratch_[static_cast<size_t>(r) * nc + j] = m(r, cols[j]);

    int rk = 0;
    for (int c = 0; c < nc && rk < rows; ++c) {
        int pr = -1;
        for (int i = rk; i < rows; ++i) {
            if (scratch_[static_cast<size_t>(i) * nc + c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != rk)
            for (int j = c; j < nc; ++j) std::swap(scratch_[static_cast<size_t>(pr) * nc + j], scratch_[static_cast<size_t>(rk) * nc + j]);
        Elt ipiv = f.inv(scratch_[static_cast<size_t>(rk) * nc + c]);
        for (int j = c; j < nc; ++j) {
            auto& x = scratch_[static_cast<size_t>(rk) * nc + j];
            x = f.mul(x, ipiv);
        }
        for (int i = rk + 1; i < rows; ++i) {
            Elt factor = scratch_[static_cast<size_t>(i) * nc + c];
            if (factor == 0) continue;
            for (int j = c; j < nc; ++j) {
                auto& x = scratch_[static_cast<size_t>(i) * nc + j];
                x = f.sub(x, f.mul(factor, scratch_[static_cast<size_t>(rk) * nc + j]));
            }
        }
        ++rk;
    }
    return rk;
}

void write_gfmat(std::ostream& os, const Matrix& m) {
    const Field& f = m.field();
    os << "GFMAT v1\n" << f.p() << " " << f.m();
    for (int c : f.modulus()) os << " " << c;
    os << " " << m.rows() << " " << m.cols() << "\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) os << " ";
            os << m(r, c);
        }
        os << "\n";
    }
}

Matrix read_gfmat(std::istream& is) {
    std::string magic, version;
    if (!(is >> magic >> version) || magic != "GFMAT" || version != "v1")
        throw std::invalid_argument("not a GFMAT v1 stream");
    int p = 0, m = 0;
    if (!(is >> p >> m)) throw std::invalid_argument("bad GFMAT header");
    std::vector<int> modulus(m + 1);
    for (auto& c : modulus)
        if (!(is >> c)) throw std::invalid_argument("bad GFMAT modulus");
    int rows = 0, cols = 0;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0) throw std::invalid_argument("bad GFMAT shape");
    Field f = Field::make(p, m, modulus);
    Matrix mat(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            long long x = 0;
            if (!(is >> x) || x < 0 || x >= static_cast<long long>(f.q()))
                throw std::invalid_argument("bad GFMAT entry");
            mat(r, c) = static_cast<Elt>(x);
        }
    }
    return mat;
}

}  // namespace grl
