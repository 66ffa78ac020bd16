#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "msa/errors.hpp"
#include "msa/matrix.hpp"
#include "msa/rng.hpp"

namespace msa {

// Eigen-decomposition of a symmetric matrix: values sorted descending, column
// i of vectors paired with values[i]. Columns are orthonormal and carry a
// fixed sign convention (largest-magnitude entry positive), so the output is
// deterministic for a given input.
struct EigPairs {
    Vector values;
    Matrix vectors;
};

namespace detail {

inline void apply_sign_convention(Matrix& vecs) {
    for (std::size_t j = 0; j < vecs.cols(); ++j) {
        std::size_t arg = 0;
        double best = 0.0;
        for (std::size_t i = 0; i < vecs.rows(); ++i) {
            const double a = std::abs(vecs(i, j));
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        if (vecs(arg, j) < 0.0) {
            for (std::size_t i = 0; i < vecs.rows(); ++i) vecs(i, j) = -vecs(i, j);
        }
    }
}

inline double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace detail

// Symmetric eigensolver, cyclic Jacobi. Input may deviate from exact symmetry
// by at most 1e-9 * ||A||_F; it is symmetrized before sweeping.
inline EigPairs sym_eig(const Matrix& a_in) {
    if (a_in.rows() != a_in.cols()) {
        throw DimensionError("sym_eig requires a square matrix, got " +
                             std::to_string(a_in.rows()) + "x" + std::to_string(a_in.cols()));
    }
    a_in.require_finite("sym_eig input");
    const std::size_t n = a_in.rows();
    const double norm_a = frobenius_norm(a_in);
    if (max_asymmetry(a_in) > 1e-9 * std::max(norm_a, 1e-300)) {
        throw ValidationError("sym_eig input is not symmetric within 1e-9 * ||A||_F");
    }

    Matrix a = a_in;
    symmetrize(a);
    Matrix v = Matrix::identity(n);

    if (n > 1 && norm_a > 0.0) {
        const double off_tol = 1e-14 * norm_a;
        const std::size_t max_sweeps = 100;
        std::size_t sweep = 0;
        for (; sweep < max_sweeps; ++sweep) {
            const double off = detail::off_diagonal_norm(a);
            if (off <= off_tol) break;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const double apq = a(p, q);
                    if (std::abs(apq) <= off_tol / static_cast<double>(n * n)) continue;
                    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;

                    const double app = a(p, p);
                    const double aqq = a(q, q);
                    a(p, p) = app - t * apq;
                    a(q, q) = aqq + t * apq;
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (k == p || k == q) continue;
                        const double akp = a(k, p);
                        const double akq = a(k, q);
                        a(k, p) = c * akp - s * akq;
                        a(p, k) = a(k, p);
                        a(k, q) = s * akp + c * akq;
                        a(q, k) = a(k, q);
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = v(k, p);
                        const double vkq = v(k, q);
                        v(k, p) = c * vkp - s * vkq;
                        v(k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
        if (sweep == max_sweeps && detail::off_diagonal_norm(a) > 1e-10 * norm_a) {
            throw ConvergenceError("Jacobi eigensolver did not converge", max_sweeps,
                                   detail::off_diagonal_norm(a));
        }
    }

    // Sort descending; stable so equal eigenvalues keep sweep order.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigPairs out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    detail::apply_sign_convention(out.vectors);
    return out;
}

namespace detail {

// Cholesky factor L (lower) of a symmetric positive definite matrix; returns
// false if a pivot is not positive.
inline bool cholesky(const Matrix& m, Matrix& l) {
    const std::size_t n = m.rows();
    l = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0 || !std::isfinite(s)) return false;
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return true;
}

inline void cholesky_solve_in_place(const Matrix& l, Matrix& b) {
    const std::size_t n = l.rows();
    const std::size_t k = b.cols();
    // forward: L z = b
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
            double s = b(i, c);
            for (std::size_t j = 0; j < i; ++j) s -= l(i, j) * b(j, c);
            b(i, c) = s / l(i, i);
        }
    }
    // backward: L^T x = z
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t c = 0; c < k; ++c) {
            double s = b(ii, c);
            for (std::size_t j = ii + 1; j < n; ++j) s -= l(j, ii) * b(j, c);
            b(ii, c) = s / l(ii, ii);
        }
    }
}

}  // namespace detail

// Solve M Z = B for symmetric positive definite M. Cholesky with iterative
// refinement until ||M Z - B||_F <= 2.5e-9 * ||B||_F or the refinement stalls.
inline Matrix solve_spd(const Matrix& m, const Matrix& b) {
    if (m.rows() != m.cols()) throw DimensionError("solve_spd requires a square matrix");
    if (m.rows() != b.rows()) throw DimensionError("solve_spd right-hand side shape mismatch");
    m.require_finite("solve_spd matrix");
    b.require_finite("solve_spd right-hand side");

    Matrix msym = m;
    symmetrize(msym);

    const EigPairs eig = sym_eig(msym);
    const double lam_max = eig.values.front();
    const double lam_min = eig.values.back();
    if (lam_max <= 0.0 || lam_min <= 1e-12 * lam_max) {
        throw ConditioningError("solve_spd matrix is not positive definite enough", lam_min);
    }

    Matrix l;
    if (!detail::cholesky(msym, l)) {
        throw ConditioningError("solve_spd Cholesky failed", lam_min);
    }

    Matrix z = b;
    detail::cholesky_solve_in_place(l, z);

    const double target = 2.5e-9 * std::max(frobenius_norm(b), 1e-300);
    Matrix r = b - msym * z;
    double best_res = frobenius_norm(r);
    for (int pass = 0; pass < 3 && best_res > target; ++pass) {
        Matrix dz = r;
        detail::cholesky_solve_in_place(l, dz);
        Matrix z_next = z + dz;
        Matrix r_next = b - msym * z_next;
        const double res = frobenius_norm(r_next);
        if (res >= best_res) break;
        z = std::move(z_next);
        r = std::move(r_next);
        best_res = res;
    }
    return z;
}

inline Vector solve_spd(const Matrix& m, const Vector& b) {
    Matrix bm(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
    const Matrix z = solve_spd(m, bm);
    return z.col(0);
}

namespace detail {

// Modified Gram-Schmidt over rows, two passes. Assumes full row rank.
inline Matrix mgs_rows(const Matrix& w) {
    Matrix q = w;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < q.rows(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                double proj = 0.0;
                for (std::size_t k = 0; k < q.cols(); ++k) proj += q(i, k) * q(j, k);
                for (std::size_t k = 0; k < q.cols(); ++k) q(i, k) -= proj * q(j, k);
            }
            double nrm = 0.0;
            for (std::size_t k = 0; k < q.cols(); ++k) nrm += q(i, k) * q(i, k);
            nrm = std::sqrt(nrm);
            if (nrm == 0.0) throw RankError("orthonormalization hit a zero row");
            for (std::size_t k = 0; k < q.cols(); ++k) q(i, k) /= nrm;
        }
    }
    return q;
}

}  // namespace detail

// Orthonormalize the rows of W (m <= n), preserving the row space. The input
// must have smallest singular value above 1e-10.
inline Matrix orthonormalize_rows(const Matrix& w) {
    if (w.rows() > w.cols()) {
        throw DimensionError("orthonormalize_rows requires rows <= cols");
    }
    w.require_finite("orthonormalize_rows input");

    Matrix gram = multiply_nt(w, w);
    symmetrize(gram);
    const EigPairs eig = sym_eig(gram);
    const double smin = std::sqrt(std::max(eig.values.back(), 0.0));
    if (!(smin > 1e-10)) {
        throw RankError("orthonormalize_rows input is rank deficient (smallest singular value " +
                        std::to_string(smin) + ")");
    }
    return detail::mgs_rows(w);
}

// Haar-ish random orthogonal matrix: Gaussian fill, Gram-Schmidt on rows.
// Deterministic per (n, seed).
inline Matrix random_orthogonal(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ValidationError("random_orthogonal requires n >= 1");
    Rng rng(seed);
    Matrix g = rng.gaussian_matrix(n, n);
    return transpose(detail::mgs_rows(g));
}

// Largest eigenvalue of a symmetric PSD matrix by power iteration. Converged
// when the eigen-residual ||A v - lambda v|| <= tol * lambda.
inline double power_iteration_top_eig(const Matrix& a, double tol, std::size_t max_iter) {
    if (a.rows() != a.cols()) throw DimensionError("power_iteration_top_eig requires square input");
    a.require_finite("power_iteration input");
    const double norm_a = frobenius_norm(a);
    if (max_asymmetry(a) > 1e-9 * std::max(norm_a, 1e-300)) {
        throw ValidationError("power_iteration_top_eig input is not symmetric");
    }
    const std::size_t n = a.rows();
    if (norm_a == 0.0) return 0.0;

    // Fixed generic start vector; deterministic, independent of caller seeds.
    Vector v(n);
    std::uint64_t state = 0x6a09e667f3bcc908ull;
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * (static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53);
    double nv = norm2(v);
    for (double& x : v) x /= nv;

    double lambda = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        Vector w = a * v;
        lambda = dot(v, w);
        Vector resid(n);
        for (std::size_t i = 0; i < n; ++i) resid[i] = w[i] - lambda * v[i];
        if (norm2(resid) <= tol * std::max(std::abs(lambda), 1e-300)) {
            return lambda;
        }
        const double nw = norm2(w);
        if (nw == 0.0) return 0.0;  // start vector lies in the null space of a PSD matrix
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
    }
    throw ConvergenceError("power iteration did not reach tolerance", max_iter, lambda);
}

}  // namespace msa
