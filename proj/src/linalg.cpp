#include "dehn/linalg.hpp"

#include <stdexcept>

namespace dehn {

RrefResult rref(const Matrix& m) {
    RrefResult out{m, 0, {}};
    Matrix& a = out.matrix;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(lead, j));
        const Rational inv = Rational(1) / a.at(lead, col);
        for (std::size_t j = col; j < cols; ++j) a.at(lead, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            const Rational f = a.at(i, col);
            for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(lead, j);
        }
        out.pivot_columns.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_columns.size();
    return out;
}

Subspace kernel(const Matrix& m) {
    const std::size_t n = m.cols();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n);
        v[free] = 1;
        // Back-substitute: pivot row i has its pivot at pivot_columns[i].
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_columns[i]] = -r.matrix.at(i, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(n, basis);
}

Polynomial char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M(M_k + c_k I).
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    Matrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational ck = -mk.trace() / Rational(static_cast<long>(k));
        coeffs[n - k] = ck;
        if (k < n) {
            Matrix shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += ck;
            mk = m * shifted;
        }
    }
    return Polynomial(std::move(coeffs));
}

int RationalEigenvalues::multiplicity_of(const Rational& lambda) const {
    for (const auto& [value, mult] : values)
        if (value == lambda) return mult;
    return 0;
}

RationalEigenvalues rational_eigen(const Matrix& m) {
    RationalRoots rr = rational_roots(char_poly(m));
    return RationalEigenvalues{std::move(rr.roots), std::move(rr.residual)};
}

Subspace generalized_kernel(const Matrix& m, const Rational& lambda, std::size_t k) {
    if (!m.is_square()) throw std::invalid_argument("generalized_kernel of non-square matrix");
    if (k == 0) throw std::invalid_argument("generalized_kernel needs k >= 1");
    Matrix shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
    Matrix power = shifted;
    for (std::size_t i = 1; i < k; ++i) power = power * shifted;
    return kernel(power);
}

CommutantResult commutant(const std::vector<Matrix>& ms, std::size_t n) {
    for (const auto& m : ms)
        if (!(m.is_square() && m.rows() == n))
            throw std::invalid_argument("commutant: matrices must be n x n");

    // Unknown Z vectorized row-major: z[a*n+b] = Z(a,b). For each M the
    // equation ZM - MZ = 0 contributes n^2 rows.
    Matrix system(ms.size() * n * n, n * n);
    std::size_t row = 0;
    for (const auto& m : ms) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row) {
                for (std::size_t a = 0; a < n; ++a) {
                    system.at(row, i * n + a) += m.at(a, j);   // (ZM)(i,j)
                    system.at(row, a * n + j) -= m.at(i, a);   // (MZ)(i,j)
                }
            }
    }
    Subspace sol = kernel(system);
    CommutantResult out;
    out.dim = sol.dim();
    for (std::size_t v = 0; v < sol.dim(); ++v) {
        Vector flat = sol.basis_vector(v);
        Matrix z(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) z.at(a, b) = flat[a * n + b];
        out.basis.push_back(std::move(z));
    }
    return out;
}

std::size_t fixed_space_dimension(const std::vector<Matrix>& ms, Side side,
                                  std::size_t rows, std::size_t cols) {
    const std::size_t acted = (side == Side::Right) ? rows : cols;
    const std::size_t free_extent = (side == Side::Right) ? cols : rows;
    Subspace common = Subspace::full(acted);
    for (const auto& m : ms) {
        if (!(m.is_square() && m.rows() == acted))
            throw std::invalid_argument("fixed_space_dimension: shape mismatch");
        Matrix shifted = (side == Side::Right) ? m : m.transpose();
        for (std::size_t i = 0; i < acted; ++i) shifted.at(i, i) -= Rational(1);
        common = common.intersect(kernel(shifted));
    }
    // Right: every column of X lies in the common fixed space; left: every row.
    return free_extent * common.dim();
}

Subspace invariant_closure(const Subspace& v, const std::vector<Matrix>& ms) {
    for (const auto& m : ms)
        if (!(m.is_square() && m.rows() == v.ambient_dim()))
            throw std::invalid_argument("invariant_closure: shape mismatch");
    Subspace w = v;
    while (true) {
        Subspace next = w;
        for (const auto& m : ms) next = next.sum(w.map(m));
        if (next.dim() == w.dim()) return w;
        w = next;
    }
}

}  // namespace dehn
