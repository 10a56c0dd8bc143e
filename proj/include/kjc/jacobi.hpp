// jacobi.hpp — cyclic Jacobi eigensolver for dense Hermitian matrices.
//
// This is the brute-force oracle every closed-form result is checked against,
// so it stays self-contained: no external linear algebra, complex plane
// rotations only.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kjc/dense_matrix.hpp"

namespace kjc::eig {

struct EigenResult {
    std::vector<double> values;     // ascending
    DenseMatrix vectors;            // orthonormal columns, vectors(:,j) <-> values[j]
    int iterations = 0;             // completed sweeps
    double offdiag_residual = 0.0;  // final off-diagonal Frobenius norm
};

namespace detail {

// Summed directly over off-diagonal entries; the difference-of-norms shortcut
// cancels catastrophically near convergence.
inline double offdiag_frobenius(const DenseMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Diagonalize a Hermitian matrix by cyclic Jacobi sweeps, rotating until the
// off-diagonal Frobenius norm drops below tol * ||m||_F. Pivots already below
// tol*||m||_F/n are skipped; they cannot keep the stopping rule from firing.
inline EigenResult hermitian_eigen(const DenseMatrix& m, double tol = 1e-14) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigen: matrix must be square");
    const std::size_t n = m.rows();
    if (n > 1024)
        throw std::invalid_argument("hermitian_eigen: size exceeds 1024");
    const double scale = std::max(1.0, m.max_abs());
    if (!m.is_hermitian(1e-12 * scale))
        throw std::invalid_argument("hermitian_eigen: input is not Hermitian");
    if (tol <= 0.0)
        throw std::invalid_argument("hermitian_eigen: tol must be positive");

    DenseMatrix a = m;
    DenseMatrix v = DenseMatrix::identity(n);
    const double norm_f = m.frobenius_norm();
    const double stop = tol * norm_f;
    const double skip = stop / static_cast<double>(n);

    constexpr int kMaxSweeps = 100;
    int sweeps = 0;
    double off = detail::offdiag_frobenius(a);
    while (off > stop) {
        if (sweeps == kMaxSweeps)
            throw std::runtime_error("hermitian_eigen: no convergence after 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= skip) continue;

                // Unitary plane rotation U = [[c, s*ph], [-s*conj(ph), c]] on
                // the (p,q) plane, ph = apq/|apq|, chosen to annihilate apq.
                const Complex ph = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sph = s * ph;
                const Complex sphc = s * std::conj(ph);

                for (std::size_t r = 0; r < n; ++r) {  // A <- A U
                    const Complex ap = a(r, p), aq = a(r, q);
                    a(r, p) = c * ap - sphc * aq;
                    a(r, q) = sph * ap + c * aq;
                }
                for (std::size_t col = 0; col < n; ++col) {  // A <- U^dag A
                    const Complex ap = a(p, col), aq = a(q, col);
                    a(p, col) = c * ap - sph * aq;
                    a(q, col) = sphc * ap + c * aq;
                }
                for (std::size_t r = 0; r < n; ++r) {  // V <- V U
                    const Complex vp = v(r, p), vq = v(r, q);
                    v(r, p) = c * vp - sphc * vq;
                    v(r, q) = sph * vp + c * vq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
        ++sweeps;
        off = detail::offdiag_frobenius(a);
    }

    EigenResult result;
    result.iterations = sweeps;
    result.offdiag_residual = off;
    result.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.values[i] = a(i, i).real();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return result.values[x] < result.values[y]; });

    std::vector<double> sorted(n);
    DenseMatrix vectors(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted[j] = result.values[order[j]];
        for (std::size_t i = 0; i < n; ++i) vectors(i, j) = v(i, order[j]);
    }
    result.values = std::move(sorted);
    result.vectors = std::move(vectors);
    return result;
}

// ||m v - value v||_2 / ||v||_2
inline double residual(const DenseMatrix& m, double value, const std::vector<Complex>& v) {
    const double nv = norm2(v);
    if (nv == 0.0) throw std::invalid_argument("residual: zero vector");
    std::vector<Complex> mv = m.apply(v);
    for (std::size_t i = 0; i < v.size(); ++i) mv[i] -= value * v[i];
    return norm2(mv) / nv;
}

}  // namespace kjc::eig
