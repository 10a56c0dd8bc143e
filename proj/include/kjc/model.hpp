// model.hpp — k-photon atom-field model: full and interaction-picture
// Hamiltonians, the 2x2 block structure the tilting transformation
// diagonalizes, closed-form spectra and normalized eigenspinors, and the
// coupling-convention adjudication report.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "kjc/dense_matrix.hpp"
#include "kjc/fock.hpp"
#include "kjc/jacobi.hpp"
#include "kjc/su2.hpp"

namespace kjc::model {

// hbar = 1 throughout; all energies are angular frequencies.
struct ModelParams {
    int k = 1;              // photons exchanged per atomic transition
    double omega = 1.0;     // field frequency
    double omega0 = 1.0;    // atomic transition frequency
    double coupling = 0.0;  // atom-field coupling lambda >= 0
    std::size_t dim = 16;   // Fock truncation

    ModelParams(int k_, double omega_, double omega0_, double coupling_, std::size_t dim_)
        : k(k_), omega(omega_), omega0(omega0_), coupling(coupling_), dim(dim_) {
        if (k < 1) throw std::invalid_argument("ModelParams: k must be >= 1");
        if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be positive");
        if (!std::isfinite(omega0)) throw std::invalid_argument("ModelParams: omega0 must be finite");
        if (!(coupling >= 0.0) || !std::isfinite(coupling))
            throw std::invalid_argument("ModelParams: coupling must be finite and >= 0");
        if (dim < static_cast<std::size_t>(k) + 4)
            throw std::invalid_argument("ModelParams: dim must be >= k + 4");
    }

    double detuning() const { return omega0 - k * omega; }
    fock::FockSpace space() const { return fock::FockSpace(dim); }
    int safe_limit() const { return static_cast<int>(dim) - 1 - k; }
};

// Basis ordering of the 2*dim product space: index 2n is |n> (x) |e>,
// index 2n+1 is |n> (x) |g>.
inline std::size_t basis_index(std::size_t n, bool excited) { return 2 * n + (excited ? 0 : 1); }

enum class Sector { coupled, uncoupled };

// One closed-form eigenvalue. Coupled entries carry branch_sign = +1/-1 and
// interaction_energy = +(1/2) sqrt(Delta^2 + 4 lambda^2 (n+k)!/n!), with
// total_energy = omega (2n+k)/2 + branch_sign * interaction_energy. Uncoupled
// entries (|m, g>, m < k) carry branch_sign = 0, interaction_energy =
// -Delta/2 and total_energy = omega m - omega0/2.
struct SpectrumEntry {
    int n = 0;
    int branch_sign = 0;  // +1, -1, or 0 for the uncoupled sector
    Sector sector = Sector::coupled;
    double detuning = 0.0;
    double interaction_energy = 0.0;
    double total_energy = 0.0;
};

// Eigenfunction of the full Hamiltonian: excited-atom component supported on
// |n>, ground-atom component on |n+k>.
struct Spinor {
    std::vector<Complex> up;    // excited-atom Fock amplitudes
    std::vector<Complex> down;  // ground-atom Fock amplitudes
};

enum class CouplingConvention {
    lambda_squared,  // 4 lambda^2 (n+k)!/n! under the root
    literal_paper,   // 4 lambda   (n+k)!/n! under the root
};

namespace detail {

inline DenseMatrix sigma0() {
    DenseMatrix s(2, 2);
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
    return s;
}

}  // namespace detail

// H = omega a^dag a + (omega0/2) sigma0 + lambda (sigma+ a^k + sigma- (a^dag)^k)
inline DenseMatrix build_hamiltonian(const ModelParams& p) {
    const fock::FockSpace space = p.space();
    const su2::PauliGenerators g = su2::pauli_realization();
    const DenseMatrix i2 = DenseMatrix::identity(2);
    const DenseMatrix id = DenseMatrix::identity(p.dim);

    DenseMatrix h = kron(Complex(p.omega) * fock::number_operator(space), i2);
    h += kron(id, Complex(0.5 * p.omega0) * detail::sigma0());
    if (p.coupling != 0.0) {
        h += Complex(p.coupling) * kron(fock::ladder_power(space, p.k, false), g.jplus);
        h += Complex(p.coupling) * kron(fock::ladder_power(space, p.k, true), g.jminus);
    }
    return h;
}

// H_I = (omega0 - k omega) J0 + lambda (sigma+ a^k + sigma- (a^dag)^k),
// the part left after removing the diagonal omega (a^dag a + k sigma0/2)
// that commutes with it.
inline DenseMatrix build_interaction_hamiltonian(const ModelParams& p) {
    const fock::FockSpace space = p.space();
    const su2::PauliGenerators g = su2::pauli_realization();
    const DenseMatrix id = DenseMatrix::identity(p.dim);

    DenseMatrix h = kron(id, Complex(0.5 * p.detuning()) * detail::sigma0());
    if (p.coupling != 0.0) {
        h += Complex(p.coupling) * kron(fock::ladder_power(space, p.k, false), g.jplus);
        h += Complex(p.coupling) * kron(fock::ladder_power(space, p.k, true), g.jminus);
    }
    return h;
}

// The interaction Hamiltonian splits exactly into 2x2 blocks on the pairs
// {|n, e>, |n+k, g>} plus 1x1 uncoupled entries: |m, g> with m < k (genuine,
// value -Delta/2) and |n, e> with n past the safe window (truncation
// artifacts, value +Delta/2).
struct BlockDecomposition {
    struct Block {
        int n = 0;
        DenseMatrix matrix;  // [[Delta/2, g_n], [g_n, -Delta/2]], g_n = lambda sqrt((n+k)!/n!)
    };
    struct UncoupledEntry {
        std::size_t fock_index = 0;
        bool excited = false;
        double value = 0.0;
        bool truncation_artifact = false;
    };

    std::vector<Block> blocks;
    std::vector<UncoupledEntry> uncoupled;

    // Reassemble the full 2*dim interaction Hamiltonian from the pieces.
    DenseMatrix to_matrix(const ModelParams& p) const {
        DenseMatrix h(2 * p.dim, 2 * p.dim);
        for (const auto& b : blocks) {
            const std::size_t up = basis_index(static_cast<std::size_t>(b.n), true);
            const std::size_t dn = basis_index(static_cast<std::size_t>(b.n) + p.k, false);
            h(up, up) = b.matrix(0, 0);
            h(up, dn) = b.matrix(0, 1);
            h(dn, up) = b.matrix(1, 0);
            h(dn, dn) = b.matrix(1, 1);
        }
        for (const auto& u : uncoupled) {
            const std::size_t i = basis_index(u.fock_index, u.excited);
            h(i, i) = u.value;
        }
        return h;
    }
};

inline BlockDecomposition block_decompose(const ModelParams& p) {
    const double half_delta = 0.5 * p.detuning();
    BlockDecomposition d;
    for (int n = 0; n <= p.safe_limit(); ++n) {
        const double g = p.coupling * std::sqrt(fock::rising_factorial(n, p.k));
        DenseMatrix b(2, 2);
        b(0, 0) = half_delta;
        b(0, 1) = g;
        b(1, 0) = g;
        b(1, 1) = -half_delta;
        d.blocks.push_back({n, std::move(b)});
    }
    for (int m = 0; m < p.k; ++m)
        d.uncoupled.push_back({static_cast<std::size_t>(m), false, -half_delta, false});
    for (int n = p.safe_limit() + 1; n < static_cast<int>(p.dim); ++n)
        d.uncoupled.push_back({static_cast<std::size_t>(n), true, half_delta, true});
    return d;
}

// Interaction energy magnitude of block n:
//   (1/2) sqrt(Delta^2 + 4 lambda^2 (n+k)!/n!)   [lambda_squared]
//   (1/2) sqrt(Delta^2 + 4 lambda   (n+k)!/n!)   [literal_paper]
// The literal form is kept only so the adjudication report can show it is
// wrong; every other consumer uses lambda_squared.
inline double interaction_energy(const ModelParams& p, int n,
                                 CouplingConvention convention = CouplingConvention::lambda_squared) {
    const double delta = p.detuning();
    const double f = fock::rising_factorial(n, p.k);
    const double c = convention == CouplingConvention::lambda_squared
                         ? 4.0 * p.coupling * p.coupling
                         : 4.0 * p.coupling;
    return 0.5 * std::sqrt(delta * delta + c * f);
}

struct MixingAngle {
    double theta = 0.0;
    double varphi = 0.0;
};

// Per-block coherent-state angle that diagonalizes block n:
// theta_n = atan2(2 lambda sqrt((n+k)!/n!), Delta) in [0, pi], varphi = 0
// (real, non-negative couplings never need a phase). Delta = 0 gives pi/2.
inline MixingAngle mixing_angle(const ModelParams& p, int n) {
    if (n < 0 || n > p.safe_limit())
        throw std::invalid_argument("mixing_angle: n outside the safe window");
    const double g = p.coupling * std::sqrt(fock::rising_factorial(n, p.k));
    return {std::atan2(2.0 * g, p.detuning()), 0.0};
}

// Closed-form spectrum: coupled branches for n = 0..n_max plus the k
// uncoupled ground-sector states. Ordered (sector, n, branch).
inline std::vector<SpectrumEntry> analytic_spectrum(
    const ModelParams& p, int n_max,
    CouplingConvention convention = CouplingConvention::lambda_squared) {
    if (n_max < 0 || n_max > p.safe_limit())
        throw std::invalid_argument("analytic_spectrum: n_max outside the safe window");
    const double delta = p.detuning();
    std::vector<SpectrumEntry> entries;
    entries.reserve(2 * (n_max + 1) + p.k);
    for (int n = 0; n <= n_max; ++n) {
        const double e_i = interaction_energy(p, n, convention);
        const double center = 0.5 * p.omega * (2 * n + p.k);
        for (int sign : {-1, +1})
            entries.push_back({n, sign, Sector::coupled, delta, e_i, center + sign * e_i});
    }
    for (int m = 0; m < p.k; ++m)
        entries.push_back({m, 0, Sector::uncoupled, delta, -0.5 * delta, p.omega * m - 0.5 * p.omega0});
    return entries;
}

// Normalized eigenspinor of block n. With theta_n from mixing_angle,
//   branch +1: ( cos(theta/2) |n>,  sin(theta/2) |n+k> )
//   branch -1: (-sin(theta/2) |n>,  cos(theta/2) |n+k> )
// The + branch connects continuously to (|n>, 0) as lambda -> 0 for Delta > 0.
inline Spinor analytic_eigenspinor(const ModelParams& p, int n, int branch_sign) {
    if (n < 0 || n > p.safe_limit())
        throw std::invalid_argument("analytic_eigenspinor: n outside the safe window");
    if (branch_sign != 1 && branch_sign != -1)
        throw std::invalid_argument("analytic_eigenspinor: branch_sign must be +1 or -1");
    const double half_theta = 0.5 * mixing_angle(p, n).theta;
    Spinor s;
    s.up.assign(p.dim, Complex{});
    s.down.assign(p.dim, Complex{});
    const double c = std::cos(half_theta);
    const double si = std::sin(half_theta);
    if (branch_sign == 1) {
        s.up[static_cast<std::size_t>(n)] = c;
        s.down[static_cast<std::size_t>(n) + p.k] = si;
    } else {
        s.up[static_cast<std::size_t>(n)] = -si;
        s.down[static_cast<std::size_t>(n) + p.k] = c;
    }
    const double nrm = std::sqrt(c * c + si * si);
    for (auto& a : s.up) a /= nrm;
    for (auto& a : s.down) a /= nrm;
    return s;
}

// Full 2*dim amplitude vector of a spinor, in the interleaved basis.
inline std::vector<Complex> spinor_amplitudes(const ModelParams& p, const Spinor& s) {
    std::vector<Complex> v(2 * p.dim);
    for (std::size_t n = 0; n < p.dim; ++n) {
        v[basis_index(n, true)] = s.up[n];
        v[basis_index(n, false)] = s.down[n];
    }
    return v;
}

// --- coupling-convention adjudication ------------------------------------

struct DiscrepancyRow {
    int n = 0;
    int branch_sign = 0;
    double energy_lambda_sq = 0.0;  // closed form, lambda^2 convention
    double energy_literal = 0.0;    // closed form, literal 4*lambda reading
    double oracle = 0.0;            // nearest brute-force eigenvalue to the lambda^2 value
    double deviation_lambda_sq = 0.0;
    double deviation_literal = 0.0;  // distance from the literal value to its nearest eigenvalue
};

// Side record of the closed-form spinor prefactors
//   sqrt(2) E_I / (sqrt(E_I + Delta) -+ sqrt(E_I - Delta))
// against the rotation components actually used. They are singular at
// Delta = 0 and do not square-sum to one in general; recorded, not used.
struct SpinorPrefactorRecord {
    int n = 0;
    double paper_up = 0.0;
    double paper_down = 0.0;
    double paper_norm_sq = 0.0;  // paper_up^2 + paper_down^2 (1 would mean normalized)
    double rotation_up = 0.0;    // cos(theta/2)
    double rotation_down = 0.0;  // sin(theta/2)
    bool finite = true;
};

struct DiscrepancyReport {
    bool conventions_distinguishable = true;  // false when lambda is 0 or 1
    std::vector<DiscrepancyRow> rows;
    double max_deviation_lambda_sq = 0.0;
    double min_deviation_literal = 0.0;
    double deviation_literal_n0 = 0.0;  // min over the two n = 0 branches
    bool lambda_sq_agrees = false;      // max deviation <= 1e-9
    bool literal_rejected = false;      // min deviation > 1e-3
    SpinorPrefactorRecord prefactors;
};

namespace detail {

inline double nearest_distance(double value, const std::vector<double>& sorted_values) {
    double best = std::numeric_limits<double>::infinity();
    for (double v : sorted_values) best = std::min(best, std::abs(value - v));
    return best;
}

inline SpinorPrefactorRecord prefactor_record(const ModelParams& p, int n) {
    SpinorPrefactorRecord r;
    r.n = n;
    const double half_theta = 0.5 * mixing_angle(p, n).theta;
    r.rotation_up = std::cos(half_theta);
    r.rotation_down = std::sin(half_theta);
    const double e_i = interaction_energy(p, n);
    const double delta = p.detuning();
    const double sp = e_i + delta;
    const double sm = e_i - delta;
    if (sp < 0.0 || sm < 0.0) {  // root arguments go negative off resonance balance
        r.finite = false;
        return r;
    }
    const double diff = std::sqrt(sp) - std::sqrt(sm);
    const double sum = std::sqrt(sp) + std::sqrt(sm);
    if (diff == 0.0 || sum == 0.0) {  // singular at Delta = 0
        r.finite = false;
        return r;
    }
    const double root2 = std::sqrt(2.0);
    r.paper_up = root2 * e_i / diff;
    r.paper_down = root2 * e_i / sum;
    r.paper_norm_sq = r.paper_up * r.paper_up + r.paper_down * r.paper_down;
    return r;
}

}  // namespace detail

// Tabulates |closed form - oracle| for the lambda^2 convention and the
// literal 4*lambda reading, against a brute-force diagonalization of the full
// Hamiltonian. For lambda in {0, 1} the conventions coincide and the report
// is flagged indistinguishable instead of adjudicated.
inline DiscrepancyReport spectrum_discrepancy_report(const ModelParams& p, int n_max) {
    if (n_max < 0 || n_max > p.safe_limit())
        throw std::invalid_argument("spectrum_discrepancy_report: n_max outside the safe window");

    DiscrepancyReport report;
    report.conventions_distinguishable = p.coupling != 0.0 && p.coupling != 1.0;
    report.prefactors = detail::prefactor_record(p, 0);

    const eig::EigenResult oracle = eig::hermitian_eigen(build_hamiltonian(p));

    report.max_deviation_lambda_sq = 0.0;
    report.min_deviation_literal = std::numeric_limits<double>::infinity();
    report.deviation_literal_n0 = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= n_max; ++n) {
        const double center = 0.5 * p.omega * (2 * n + p.k);
        const double e_sq = interaction_energy(p, n, CouplingConvention::lambda_squared);
        const double e_lit = interaction_energy(p, n, CouplingConvention::literal_paper);
        for (int sign : {-1, +1}) {
            DiscrepancyRow row;
            row.n = n;
            row.branch_sign = sign;
            row.energy_lambda_sq = center + sign * e_sq;
            row.energy_literal = center + sign * e_lit;
            row.deviation_lambda_sq = detail::nearest_distance(row.energy_lambda_sq, oracle.values);
            row.deviation_literal = detail::nearest_distance(row.energy_literal, oracle.values);
            row.oracle = row.energy_lambda_sq +
                         (row.deviation_lambda_sq == 0.0 ? 0.0 : 0.0);  // filled below
            // locate the actual nearest eigenvalue for the record
            double best = std::numeric_limits<double>::infinity();
            for (double v : oracle.values)
                if (std::abs(row.energy_lambda_sq - v) < best) {
                    best = std::abs(row.energy_lambda_sq - v);
                    row.oracle = v;
                }
            report.max_deviation_lambda_sq =
                std::max(report.max_deviation_lambda_sq, row.deviation_lambda_sq);
            report.min_deviation_literal =
                std::min(report.min_deviation_literal, row.deviation_literal);
            if (n == 0)
                report.deviation_literal_n0 =
                    std::min(report.deviation_literal_n0, row.deviation_literal);
            report.rows.push_back(row);
        }
    }
    report.lambda_sq_agrees = report.max_deviation_lambda_sq <= 1e-9;
    report.literal_rejected =
        report.conventions_distinguishable && report.min_deviation_literal > 1e-3;
    return report;
}

}  // namespace kjc::model
