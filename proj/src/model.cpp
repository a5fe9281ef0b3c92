#include "landauer/model.hpp"

#include <cmath>
#include <string>

namespace landauer::model {

namespace {

void require_range(double x, double lo, double hi, const char* name) {
    if (!(x >= lo && x <= hi))
        throw std::invalid_argument(std::string(name) + " out of range [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");
}

} // namespace

Mat2 pauli_x() {
    Mat2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Mat2 pauli_y() {
    Mat2 m;
    m(0, 1) = complexd{0.0, -1.0};
    m(1, 0) = complexd{0.0, 1.0};
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

Mat2 identity2() { return Mat2::identity(); }

double SystemStateParams::delta() const {
    return w * std::sqrt(alpha_sq) * std::sqrt(1.0 - alpha_sq);
}

Mat2 system_state(const SystemStateParams& p) {
    require_range(p.alpha_sq, 0.0, 1.0, "alpha_sq");
    require_range(p.w, 0.0, 1.0, "w");
    const double d = p.delta();
    Mat2 m;
    m(0, 0) = 1.0 - p.alpha_sq;
    m(0, 1) = d;
    m(1, 0) = d;
    m(1, 1) = p.alpha_sq;
    return m;
}

ThermalWeights thermal_weights(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    const double em = std::exp(-beta);
    const double ep = std::exp(beta);
    const double z = em + ep;
    return {em / z, ep / z, z};
}

Mat2 thermal_state(const EnvironmentParams& e) {
    const ThermalWeights w = thermal_weights(e.beta);
    Mat2 m;
    m(0, 0) = w.p_excited;
    m(1, 1) = w.p_ground;
    return m;
}

Mat2 ground_state() {
    Mat2 m;
    m(1, 1) = 1.0;
    return m;
}

Mat4 free_hamiltonian() {
    return linalg::kron(pauli_z(), identity2()) + linalg::kron(identity2(), pauli_z());
}

Mat4 interaction_hamiltonian(const InteractionModel& m) {
    return m.jx * linalg::kron(pauli_x(), pauli_x()) +
           m.jy * linalg::kron(pauli_y(), pauli_y()) +
           m.jz * linalg::kron(pauli_z(), pauli_z());
}

Mat4 total_hamiltonian(const InteractionModel& m) {
    return free_hamiltonian() + interaction_hamiltonian(m);
}

double von_neumann_entropy(const Mat2& rho) {
    const auto eig = linalg::hermitian_eig(rho);
    double acc = 0.0;
    for (double l : eig.values) {
        if (l < -1e-12)
            throw std::invalid_argument("von_neumann_entropy: eigenvalue below -1e-12");
        if (l <= 0.0) continue; // 0 ln 0 := 0, with [-1e-12, 0) clamped
        acc += l * std::log(l);
    }
    return 0.0 - acc;
}

double linear_entropy(const Mat2& rho) {
    double purity = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) purity += std::norm(rho(r, c));
    return 2.0 * (1.0 - purity);
}

double BlochVector::norm() const { return std::sqrt(vx * vx + vy * vy + vz * vz); }

BlochVector bloch_vector(const Mat2& rho) {
    BlochVector v;
    v.vx = 2.0 * rho(0, 1).real();
    v.vy = -2.0 * rho(0, 1).imag();
    v.vz = rho(0, 0).real() - rho(1, 1).real();
    return v;
}

Mat2 from_bloch(const BlochVector& v) {
    if (v.norm() > 1.0 + 1e-12)
        throw std::invalid_argument("from_bloch: |v| exceeds 1 beyond 1e-12");
    Mat2 m;
    m(0, 0) = 0.5 * (1.0 + v.vz);
    m(1, 1) = 0.5 * (1.0 - v.vz);
    m(0, 1) = complexd{0.5 * v.vx, -0.5 * v.vy};
    m(1, 0) = complexd{0.5 * v.vx, 0.5 * v.vy};
    return m;
}

} // namespace landauer::model
