// su2.hpp — Pauli realization of su(2), the SU(2) displacement operator,
// tilting-transformation identities, Gaussian decomposition, and Perelomov
// number coherent states.

#pragma once

#include <cmath>
#include <stdexcept>

#include "kjc/dense_matrix.hpp"

namespace kjc::su2 {

// Coherent-state parameters of the displacement operator
// D(xi) = exp(xi J+ - xi* J-), with xi = -(theta/2) e^{-i varphi}, together
// with the scalars that appear in the Gaussian decomposition and the tilted
// generators:
//
//   zeta    = -tan(theta/2) e^{-i varphi}
//   eta     = ln(1 + |zeta|^2) = -2 ln cos|xi|
//   delta   = sin(2|xi|)
//   epsilon = (cos(2|xi|) - 1) / 2
//
// zeta and eta are meaningful for theta in (-pi, pi); construction outside
// that range is allowed (the displacement matrix itself stays well defined)
// but gauss_decompose will refuse it.
struct TiltParams {
    double theta = 0.0;
    double varphi = 0.0;
    Complex xi{};
    Complex zeta{};
    double eta = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;

    TiltParams(double theta_, double varphi_) : theta(theta_), varphi(varphi_) {
        if (!std::isfinite(theta) || !std::isfinite(varphi))
            throw std::invalid_argument("TiltParams: angles must be finite");
        const Complex phase = std::polar(1.0, -varphi);
        xi = -0.5 * theta * phase;
        zeta = -std::tan(0.5 * theta) * phase;
        eta = std::log1p(std::norm(zeta));
        const double two_axi = 2.0 * std::abs(xi);
        delta = std::sin(two_axi);
        epsilon = 0.5 * (std::cos(two_axi) - 1.0);
    }
};

struct PauliGenerators {
    DenseMatrix j0;      // diag(1/2, -1/2)
    DenseMatrix jplus;   // [[0,1],[0,0]]
    DenseMatrix jminus;  // [[0,0],[1,0]]
};

inline PauliGenerators pauli_realization() {
    PauliGenerators g{DenseMatrix(2, 2), DenseMatrix(2, 2), DenseMatrix(2, 2)};
    g.j0(0, 0) = 0.5;
    g.j0(1, 1) = -0.5;
    g.jplus(0, 1) = 1.0;
    g.jminus(1, 0) = 1.0;
    return g;
}

// Closed form of D(xi) in the fundamental representation:
//   [[cos|xi|,                (xi/|xi|) sin|xi|],
//    [-(xi*/|xi|) sin|xi|,    cos|xi|          ]]
// xi = 0 returns the identity (removable singularity).
inline DenseMatrix displacement_matrix(const TiltParams& tilt) {
    const double axi = std::abs(tilt.xi);
    if (axi == 0.0) return DenseMatrix::identity(2);
    const Complex u = tilt.xi / axi;
    const double c = std::cos(axi);
    const double s = std::sin(axi);
    DenseMatrix d(2, 2);
    d(0, 0) = c;
    d(0, 1) = u * s;
    d(1, 0) = -std::conj(u) * s;
    d(1, 1) = c;
    return d;
}

enum class Generator { J0, JPlus, JMinus };

// Tilted generator D^dag(xi) J D(xi) from the closed-form identities
//
//   D^dag J+ D = -(xi*/|xi|) delta J0 + epsilon (J+ + (xi*/xi) J-) + J+
//   D^dag J- D = -(xi /|xi|) delta J0 + epsilon (J- + (xi/xi*) J+) + J-
//   D^dag J0 D = (2 epsilon + 1) J0 + (delta xi / 2|xi|) J+ + (delta xi* / 2|xi|) J-
//
// xi = 0 has no well-defined direction xi/|xi|; callers should use the
// untransformed generator there.
inline DenseMatrix tilt_generator(Generator which, const TiltParams& tilt) {
    const double axi = std::abs(tilt.xi);
    if (axi == 0.0)
        throw std::domain_error("tilt_generator: xi = 0 leaves the rotation axis undefined");
    const Complex u = tilt.xi / axi;
    const Complex uc = std::conj(u);
    const PauliGenerators g = pauli_realization();
    switch (which) {
        case Generator::JPlus:
            return (-uc * tilt.delta) * g.j0 + Complex(tilt.epsilon) * (g.jplus + (uc / u) * g.jminus) +
                   g.jplus;
        case Generator::JMinus:
            return (-u * tilt.delta) * g.j0 + Complex(tilt.epsilon) * (g.jminus + (u / uc) * g.jplus) +
                   g.jminus;
        case Generator::J0:
            return Complex(2.0 * tilt.epsilon + 1.0) * g.j0 + (0.5 * tilt.delta * u) * g.jplus +
                   (0.5 * tilt.delta * uc) * g.jminus;
    }
    throw std::logic_error("tilt_generator: unknown generator");
}

struct GaussFactors {
    Complex zeta{};
    double eta = 0.0;
};

// Gaussian (normal-ordered) decomposition of the displacement operator,
//   D(xi) = exp(zeta J+) exp(eta J0) exp(-zeta* J-),
// valid for theta in (-pi, pi) where tan(theta/2) is defined.
inline GaussFactors gauss_decompose(const TiltParams& tilt) {
    constexpr double kPi = 3.141592653589793238462643383279502884;
    if (!(std::abs(tilt.theta) < kPi))
        throw std::domain_error("gauss_decompose: |theta| must be < pi");
    return {tilt.zeta, tilt.eta};
}

// Perelomov number coherent state D(xi)|j, mu>, expanded over |j, m>. Angular
// momenta are stored doubled so half-integers stay exact: twice_j = 2j,
// twice_mu = 2mu. coefficients[i] multiplies |j, m> with m = -j + i.
struct PerelomovState {
    int twice_j = 0;
    int twice_mu = 0;
    Complex zeta{};
    std::vector<Complex> coefficients;

    Complex coefficient(int twice_m) const {
        const int i = (twice_m + twice_j) / 2;
        if ((twice_m + twice_j) % 2 != 0 || i < 0 || i >= static_cast<int>(coefficients.size()))
            throw std::out_of_range("PerelomovState: m outside the multiplet");
        return coefficients[static_cast<std::size_t>(i)];
    }
};

namespace detail {

inline Complex ipow(Complex base, int e) {
    Complex r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace detail

// Double-sum expansion of D(xi)|j, mu> with Gamma-function weights. The sums
// run over every (s, n) for which all Gamma arguments are positive integers
// and the target ket stays inside the multiplet; everything else contributes
// zero. The result is normalized explicitly after summation.
inline PerelomovState perelomov_number_state(int twice_j, int twice_mu, Complex zeta) {
    if (twice_j < 0)
        throw std::invalid_argument("perelomov_number_state: j must be >= 0");
    if (std::abs(twice_mu) > twice_j || (twice_j - twice_mu) % 2 != 0)
        throw std::invalid_argument("perelomov_number_state: mu must lie in -j..j in integer steps");

    const int jp = (twice_j + twice_mu) / 2;  // j + mu
    const int jm = (twice_j - twice_mu) / 2;  // j - mu
    const double mu = 0.5 * twice_mu;
    const double eta = std::log1p(std::norm(zeta));

    PerelomovState state;
    state.twice_j = twice_j;
    state.twice_mu = twice_mu;
    state.zeta = zeta;
    state.coefficients.assign(static_cast<std::size_t>(twice_j) + 1, Complex{});

    for (int n = 0; n <= jp; ++n) {
        for (int s = 0; s <= jm + n; ++s) {
            const int i = jp - n + s;  // ket index of |j, mu - n + s>
            const double logw = std::lgamma(jm + n + 1.0) - std::lgamma(jp - n + 1.0) +
                                0.5 * (std::lgamma(jp + 1.0) + std::lgamma(jp - n + s + 1.0) -
                                       std::lgamma(jm + 1.0) - std::lgamma(jm + n - s + 1.0)) +
                                eta * (mu - n) - std::lgamma(s + 1.0) - std::lgamma(n + 1.0);
            state.coefficients[static_cast<std::size_t>(i)] +=
                detail::ipow(zeta, s) * detail::ipow(-std::conj(zeta), n) * std::exp(logw);
        }
    }

    const double nrm = norm2(state.coefficients);
    if (!(nrm > 0.0) || !std::isfinite(nrm))
        throw std::runtime_error("perelomov_number_state: expansion failed to normalize");
    for (auto& c : state.coefficients) c /= nrm;
    return state;
}

}  // namespace kjc::su2
