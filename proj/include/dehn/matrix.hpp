#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "dehn/rational.hpp"

namespace dehn {

using Vector = std::vector<Rational>;

/// Dense matrix over the rationals, row-major. All arithmetic is exact;
/// equality is entry-wise exact equality. Shape mismatches throw
/// std::invalid_argument, inversion of a singular matrix throws
/// std::domain_error.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(const Vector& diag);
    static Matrix block_diagonal(const std::vector<Matrix>& blocks);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
    /// Rank-one product col * row (outer product).
    static Matrix outer(const Vector& col, const Vector& row);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    void set_column(std::size_t c, const Vector& v);
    /// Copy of the h x w block with top-left corner (r, c).
    Matrix block(std::size_t r, std::size_t c, std::size_t h, std::size_t w) const;

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Rational trace() const;
    Rational determinant() const;
    std::size_t rank() const;
    bool invertible() const { return is_square() && rank() == rows_; }
    Matrix inverse() const;
    /// Integer power; negative exponents invert first.
    Matrix pow(long e) const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

bool commutes(const Matrix& a, const Matrix& b);

// Small vector helpers used by basis manipulations.
Vector scaled(const Vector& v, const Rational& s);
Vector add_scaled(Vector v, const Rational& s, const Vector& w);
bool is_zero_vector(const Vector& v);

}  // namespace dehn
