#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "msa/errors.hpp"

namespace msa {

using Vector = std::vector<double>;

// Dense real matrix, row-major. Entries are validated to be finite when the
// matrix is built from user data; internal kernels keep them finite.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) {
            throw ValidationError("matrix dimensions must be at least 1x1");
        }
    }

    Matrix(std::size_t rows, std::size_t cols, Vector entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0) {
            throw ValidationError("matrix dimensions must be at least 1x1");
        }
        if (data_.size() != rows * cols) {
            throw DimensionError("entry count " + std::to_string(data_.size()) +
                                 " does not match " + std::to_string(rows) + "x" +
                                 std::to_string(cols));
        }
        require_finite("matrix construction");
    }

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        const std::size_t r = rows.size();
        if (r == 0) throw ValidationError("matrix dimensions must be at least 1x1");
        const std::size_t c = rows.begin()->size();
        Vector entries;
        entries.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) throw DimensionError("ragged row in matrix literal");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return Matrix(r, c, std::move(entries));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }
    const Vector& entries() const noexcept { return data_; }

    Vector row(std::size_t i) const {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Vector col(std::size_t j) const {
        Vector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    void set_row(std::size_t i, const Vector& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    bool is_finite() const noexcept {
        for (double v : data_) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

    void require_finite(const std::string& context) const {
        if (!is_finite()) {
            throw ValidationError("non-finite entry in " + context);
        }
    }

    bool same_shape(const Matrix& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("matrix addition shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) c.data()[k] = a.data()[k] + b.data()[k];
    return c;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("matrix subtraction shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) c.data()[k] = a.data()[k] - b.data()[k];
    return c;
}

inline Matrix operator*(double s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) c.data()[k] = s * a.data()[k];
    return c;
}

inline Matrix operator*(const Matrix& a, double s) { return s * a; }

// C = A * B
inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

// C = A * B^T
inline Matrix multiply_nt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("A*B^T shape mismatch");
    Matrix c(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(j, k);
            c(i, j) = s;
        }
    }
    return c;
}

// C = A^T * B
inline Matrix multiply_tn(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("A^T*B shape mismatch");
    Matrix c(a.cols(), b.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double aki = a(k, i);
            if (aki == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aki * b(k, j);
        }
    }
    return c;
}

inline Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
    Vector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

// y = A^T * x
inline Vector multiply_tv(const Matrix& a, const Vector& x) {
    if (a.rows() != x.size()) throw DimensionError("A^T*x shape mismatch");
    Vector y(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += a(i, j) * xi;
    }
    return y;
}

inline Matrix outer(const Vector& u, const Vector& v) {
    Matrix c(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) c(i, j) = u[i] * v[j];
    return c;
}

inline double dot(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw DimensionError("dot product shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

inline double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) s += a.data()[k] * a.data()[k];
    return std::sqrt(s);
}

inline double frobenius_norm_sq(const Matrix& a) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) s += a.data()[k] * a.data()[k];
    return s;
}

inline double max_abs(const Matrix& a) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) s = std::max(s, std::abs(a.data()[k]));
    return s;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("max_abs_diff shape mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k)
        s = std::max(s, std::abs(a.data()[k] - b.data()[k]));
    return s;
}

inline double trace(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("trace of non-square matrix");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
    return s;
}

// <A, B> = tr(A^T B)
inline double frobenius_inner(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("frobenius_inner shape mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) s += a.data()[k] * b.data()[k];
    return s;
}

// Exact symmetrization: both triangles averaged in place.
inline void symmetrize(Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("symmetrize of non-square matrix");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    }
}

inline double max_asymmetry(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("max_asymmetry of non-square matrix");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            s = std::max(s, std::abs(a(i, j) - a(j, i)));
    return s;
}

}  // namespace msa
