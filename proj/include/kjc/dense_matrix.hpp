// dense_matrix.hpp — complex dense matrices backing all operator representations

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kjc {

using Complex = std::complex<double>;

// Row-major complex matrix with value semantics. One container serves every
// operator in the library: Fock-truncated ladder products, 2x2 spin blocks,
// full atom-field Hamiltonians.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    DenseMatrix adjoint() const {
        DenseMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    DenseMatrix& operator+=(const DenseMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }

    DenseMatrix& operator-=(const DenseMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }

    DenseMatrix& operator*=(Complex scale) {
        for (auto& e : entries_) e *= scale;
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(Complex s, DenseMatrix m) { return m *= s; }
    friend DenseMatrix operator*(DenseMatrix m, Complex s) { return m *= s; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("DenseMatrix: incompatible shapes in product");
        DenseMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    std::vector<Complex> apply(const std::vector<Complex>& v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("DenseMatrix: vector length mismatch");
        std::vector<Complex> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& e : entries_) m = std::max(m, std::abs(e));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& e : entries_) s += std::norm(e);
        return std::sqrt(s);
    }

    bool is_hermitian(double tol = 1e-14) const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        return true;
    }

private:
    void check_same_shape(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("DenseMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

// Kronecker product, left factor major: result[(i*Br+r), (j*Bc+c)] = a(i,j) b(r,c).
inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    r(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return r;
}

inline double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& e : v) s += std::norm(e);
    return std::sqrt(s);
}

}  // namespace kjc
