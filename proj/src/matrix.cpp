#include "dehn/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dehn {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vector& diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks) {
    std::size_t n = 0, k = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw std::invalid_argument("block_diagonal needs square blocks");
        n += b.rows();
    }
    Matrix m(n, n);
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(k + i, k + j) = b.at(i, j);
        k += b.rows();
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

Matrix Matrix::outer(const Vector& col, const Vector& row) {
    Matrix m(col.size(), row.size());
    for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j) m.at(i, j) = col[i] * row[j];
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v[i];
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t h, std::size_t w) const {
    if (r + h > rows_ || c + w > cols_) throw std::invalid_argument("block out of range");
    Matrix m(h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) m.at(i, j) = at(r + i, c + j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Rational Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Rational Matrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
    Matrix a(*this);
    const std::size_t n = rows_;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        const Rational inv = Rational(1) / a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            const Rational f = a.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

Matrix Matrix::operator-() const {
    Matrix m(*this);
    for (auto& e : m.entries_) e = -e;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& f = a.at(i, k);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += f * b.at(k, j);
        }
    return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a.at(i, j) * v[j];
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols_; ++j) {
            if (j) os << ", ";
            os << m.at(i, j);
        }
    }
    return os << "]";
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) m.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) m.at(a.rows() + i, j) = b.at(i, j);
    }
    return m;
}

bool commutes(const Matrix& a, const Matrix& b) { return a * b == b * a; }

Vector scaled(const Vector& v, const Rational& s) {
    Vector out(v);
    for (auto& e : out) e *= s;
    return out;
}

Vector add_scaled(Vector v, const Rational& s, const Vector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += s * w[i];
    return v;
}

bool is_zero_vector(const Vector& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace dehn
