// fock.hpp — truncated bosonic Fock space: ladder operators, ordered products,
// and the one-sided pseudo-inverse of the k-th creation power

#pragma once

#include <cmath>
#include <stdexcept>

#include "kjc/dense_matrix.hpp"

namespace kjc::fock {

// Number states |0> .. |dim-1>. Products of k ladder factors are exact only on
// the safe window n <= dim-1-k; diagonal entries above it are truncation
// artifacts and every model-level claim is restricted to the window.
struct FockSpace {
    std::size_t dim;

    explicit FockSpace(std::size_t d) : dim(d) {
        if (dim == 0) throw std::invalid_argument("FockSpace: dim must be positive");
    }

    // Largest number state whose order-k product entries are exact.
    int safe_limit(int k) const { return static_cast<int>(dim) - 1 - k; }
};

// (n+k)!/n! by direct product of the k ladder factors.
inline double rising_factorial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= static_cast<double>(n + i);
    return r;
}

// n!/(n-k)!; zero when fewer than k quanta are available.
inline double falling_factorial(int n, int k) {
    if (n < k) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= static_cast<double>(n - i);
    return r;
}

// a |n> = sqrt(n) |n-1>
inline DenseMatrix annihilation(const FockSpace& space) {
    DenseMatrix a(space.dim, space.dim);
    for (std::size_t n = 1; n < space.dim; ++n)
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline DenseMatrix creation(const FockSpace& space) { return annihilation(space).adjoint(); }

inline DenseMatrix number_operator(const FockSpace& space) {
    DenseMatrix n(space.dim, space.dim);
    for (std::size_t i = 0; i < space.dim; ++i) n(i, i) = static_cast<double>(i);
    return n;
}

// a^k or (a^dag)^k by repeated multiplication. k = 0 is rejected; callers that
// want the identity should say so explicitly.
inline DenseMatrix ladder_power(const FockSpace& space, int k, bool dagger) {
    if (k < 1) throw std::invalid_argument("ladder_power: k must be >= 1");
    const DenseMatrix base = dagger ? creation(space) : annihilation(space);
    DenseMatrix r = base;
    for (int i = 1; i < k; ++i) r = r * base;
    return r;
}

// a^k (a^dag)^k. Diagonal with entry (n+k)!/n! on the safe window; entries at
// n > safe_limit(k) are truncation artifacts.
inline DenseMatrix antinormal_product(const FockSpace& space, int k) {
    if (k < 1) throw std::invalid_argument("antinormal_product: k must be >= 1");
    return ladder_power(space, k, false) * ladder_power(space, k, true);
}

// (a^dag)^k a^k. Diagonal with entry n!/(n-k)!, exactly zero for n < k; the
// truncated product is exact at every index, including the top edge.
inline DenseMatrix normal_product(const FockSpace& space, int k) {
    if (k < 1) throw std::invalid_argument("normal_product: k must be >= 1");
    return ladder_power(space, k, true) * ladder_power(space, k, false);
}

// One-sided inverse of (a^dag)^k: the unique matrix P supported on
// |n+k> -> |n| transitions with P[n, n+k] = sqrt(n!/(n+k)!). It satisfies
//
//   (a^dag)^k P = 1 - sum_{m<k} |m><m|   exactly, at every index, and
//   P (a^dag)^k = 1                      on the safe window n <= dim-1-k
//                                        (zero above it, a truncation artifact).
inline DenseMatrix pseudo_inverse_creation(const FockSpace& space, int k) {
    if (k < 1) throw std::invalid_argument("pseudo_inverse_creation: k must be >= 1");
    if (space.dim <= static_cast<std::size_t>(k))
        throw std::invalid_argument("pseudo_inverse_creation: dim must exceed k");
    DenseMatrix p(space.dim, space.dim);
    for (std::size_t n = 0; n + k < space.dim; ++n)
        p(n, n + k) = 1.0 / std::sqrt(rising_factorial(static_cast<int>(n), k));
    return p;
}

}  // namespace kjc::fock
