#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dehn/matrix.hpp"
#include "dehn/polynomial.hpp"
#include "dehn/subspace.hpp"

namespace dehn {

struct RrefResult {
    Matrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form; idempotent.
RrefResult rref(const Matrix& m);

/// {v : Mv = 0} in canonical form; dim = cols - rank.
Subspace kernel(const Matrix& m);

/// det(tI - M), exact and monic (Faddeev-LeVerrier).
Polynomial char_poly(const Matrix& m);

/// Rational eigenvalues with multiplicities; non-rational content stays in the
/// residual factor of the characteristic polynomial.
struct RationalEigenvalues {
    std::vector<std::pair<Rational, int>> values;  // sorted ascending
    Polynomial residual;

    int multiplicity_of(const Rational& lambda) const;
};
RationalEigenvalues rational_eigen(const Matrix& m);

/// ker((M - lambda I)^k), k >= 1.
Subspace generalized_kernel(const Matrix& m, const Rational& lambda, std::size_t k);

/// Solution space of {Z : ZM = MZ for all M}, as dimension plus a basis of
/// n x n matrices (the stacked linear system's kernel, reshaped).
struct CommutantResult {
    std::size_t dim = 0;
    std::vector<Matrix> basis;
};
CommutantResult commutant(const std::vector<Matrix>& ms, std::size_t n);

enum class Side { Left, Right };

/// dim{X (rows x cols) : MX = X for all M} for Side::Right,
/// dim{Y (rows x cols) : YM = Y for all M} for Side::Left.
std::size_t fixed_space_dimension(const std::vector<Matrix>& ms, Side side,
                                  std::size_t rows, std::size_t cols);

/// Smallest subspace containing v and closed under every matrix of ms.
Subspace invariant_closure(const Subspace& v, const std::vector<Matrix>& ms);

}  // namespace dehn
