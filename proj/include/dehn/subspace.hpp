#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "dehn/matrix.hpp"

namespace dehn {

/// A subspace of Q^m held as a canonical reduced basis: the basis matrix's
/// columns are in column-reduced echelon form (pivots 1, pivot rows increasing,
/// pivot rows cleared in the other columns). Two Subspace values are equal iff
/// they are the same subspace.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    /// Span of the columns of m (dependent columns allowed).
    static Subspace span_of_columns(const Matrix& m);
    static Subspace span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    /// Canonical basis, one column per basis vector.
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t j) const { return basis_.column(j); }

    bool is_zero() const { return dim() == 0; }
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// True iff m maps this subspace into itself.
    bool invariant_under(const Matrix& m) const;

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    /// Image under m.
    Subspace map(const Matrix& m) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Subspace& s);

private:
    std::size_t ambient_;
    Matrix basis_;  // ambient_ x dim
};

}  // namespace dehn
