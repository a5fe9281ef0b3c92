// model.hpp — initial states, interaction Hamiltonians, and single-qubit
// state functionals. Both qubits carry the free Hamiltonian sigma_z, so in
// the ordered basis {|1>,|0>} the excited level sits at energy +1 and the
// ground level at -1.

#pragma once

#include <optional>

#include "landauer/linalg.hpp"

namespace landauer::model {

using linalg::complexd;
using linalg::Mat2;
using linalg::Mat4;

// ----------------------------------------------------------- Pauli operators

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 identity2();

// ------------------------------------------------------------ initial states

// Ground-state population alpha^2 and coherence fraction w; the off-diagonal
// element is delta = w * alpha * sqrt(1 - alpha^2), real and nonnegative,
// so 0 <= delta <= 1/2.
struct SystemStateParams {
    double alpha_sq = 0.0;
    double w = 0.0;

    double delta() const;
};

struct EnvironmentParams {
    double beta = 1.0; // inverse temperature, beta > 0
};

// rho_S = [[1 - alpha^2, delta], [delta, alpha^2]] in the basis {|1>,|0>}.
Mat2 system_state(const SystemStateParams& p);

// Thermal qubit diag(e^{-beta}, e^{+beta}) / (2 cosh beta). Infinite beta is
// not accepted; use ground_state() for the cold limit.
Mat2 thermal_state(const EnvironmentParams& e);

// |0><0|, the beta -> infinity limit of thermal_state.
Mat2 ground_state();

// Shared thermal bookkeeping so every module normalizes with the same
// partition-function value.
struct ThermalWeights {
    double p_excited; // population of |1>, energy +1
    double p_ground;  // population of |0>, energy -1
    double z;         // e^{-beta} + e^{+beta}
};
ThermalWeights thermal_weights(double beta);

// ------------------------------------------------------------- Hamiltonians

enum class InteractionKind { XX, Ising, Generic };

// H_int = Jx sx(x)sx + Jy sy(x)sy + Jz sz(x)sz on top of the free part
// sz(x)1 + 1(x)sz. XX uses (J, J, 0), Ising (J, 0, 0).
struct InteractionModel {
    InteractionKind kind = InteractionKind::XX;
    double jx = 0.0;
    double jy = 0.0;
    double jz = 0.0;

    static InteractionModel xx(double j) { return {InteractionKind::XX, j, j, 0.0}; }
    static InteractionModel ising(double j) { return {InteractionKind::Ising, j, 0.0, 0.0}; }
    static InteractionModel generic(double jx, double jy, double jz) {
        return {InteractionKind::Generic, jx, jy, jz};
    }
};

Mat4 free_hamiltonian();
Mat4 interaction_hamiltonian(const InteractionModel& m);
Mat4 total_hamiltonian(const InteractionModel& m);

// ---------------------------------------------------------- state functionals

// -sum l ln l in nats, with 0 ln 0 := 0. Eigenvalues in [-1e-12, 0) are
// clamped to zero; anything below -1e-12 signals an invalid state upstream
// and throws.
double von_neumann_entropy(const Mat2& rho);

// S_L = 2 (1 - Tr[rho^2]), in [0, 1].
double linear_entropy(const Mat2& rho);

struct BlochVector {
    double vx = 0.0;
    double vy = 0.0;
    double vz = 0.0;

    double norm() const;
};

// rho = (1 + sigma . v) / 2. States built by system_state map to
// v = (2 delta, 0, 1 - 2 alpha^2).
BlochVector bloch_vector(const Mat2& rho);
Mat2 from_bloch(const BlochVector& v); // rejects |v| > 1 + 1e-12

} // namespace landauer::model
