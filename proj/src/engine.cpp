#include "landauer/engine.hpp"

#include <array>
#include <cmath>
#include <string>

namespace landauer::engine {

namespace {

using linalg::complexd;
using linalg::HermitianEig;
using linalg::Subsystem;

void check_state(const Mat2& rho, const char* who) {
    if (linalg::hermiticity_defect(rho) > 1e-12)
        throw std::invalid_argument(std::string(who) + ": state is not Hermitian");
    if (std::abs(rho.trace() - complexd{1.0, 0.0}) > 1e-12)
        throw std::invalid_argument(std::string(who) + ": state trace deviates from one");
}

// Eigenvalue floor policy for evolved states: tolerate rounding down to
// -1e-12, repair anything in [-1e-9, -1e-12) by clamping and renormalizing,
// refuse worse.
Mat4 enforce_psd(const Mat4& rho) {
    const auto eig = linalg::hermitian_eig(rho);
    const double min_l = eig.values[0];
    if (min_l >= -1e-12) return rho;
    if (min_l < -1e-9)
        throw std::runtime_error("evolve: evolved state eigenvalue below -1e-9");

    std::array<double, 4> clamped{};
    double tr = 0.0;
    for (int i = 0; i < 4; ++i) {
        clamped[static_cast<std::size_t>(i)] = std::max(eig.values[static_cast<std::size_t>(i)], 0.0);
        tr += clamped[static_cast<std::size_t>(i)];
    }
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            complexd acc{0.0, 0.0};
            for (int k = 0; k < 4; ++k)
                acc += eig.vectors(r, k) * (clamped[static_cast<std::size_t>(k)] / tr) *
                       std::conj(eig.vectors(c, k));
            out(r, c) = acc;
        }
    return out;
}

Mat4 evolve_impl(const HermitianEig<4>& eig, const Mat4& rho0, double t) {
    return enforce_psd(linalg::evolve_density(eig, rho0, t));
}

double env_energy(const Mat2& rho_e) {
    return rho_e(0, 0).real() - rho_e(1, 1).real();
}

// <nu|U|mu> as an operator on the system; joint index = 2*s + e.
Mat2 sandwich_block(const Mat4& u, int nu, int mu) {
    Mat2 a;
    for (int s = 0; s < 2; ++s)
        for (int sp = 0; sp < 2; ++sp) a(s, sp) = u(2 * s + nu, 2 * sp + mu);
    return a;
}

double tpm_sum(const Mat4& u, const Mat2& sys0, double beta) {
    // Accumulate unnormalized e^{-beta E_nu} weights and divide by Z once,
    // so U = 1 gives the sum exactly one.
    const double weight[2] = {std::exp(-beta), std::exp(beta)};
    const double z = weight[0] + weight[1];

    double acc = 0.0;
    for (int nu = 0; nu < 2; ++nu) {
        for (int mu = 0; mu < 2; ++mu) {
            const Mat2 a = sandwich_block(u, nu, mu);
            // Tr[a rho a^dag]
            complexd tr{0.0, 0.0};
            for (int s = 0; s < 2; ++s)
                for (int s1 = 0; s1 < 2; ++s1)
                    for (int s2 = 0; s2 < 2; ++s2)
                        tr += a(s, s1) * sys0(s1, s2) * std::conj(a(s, s2));
            acc += weight[nu] * tr.real();
        }
    }
    return acc / z;
}

} // namespace

Mat4 evolve(const InteractionModel& m, const Mat2& sys, const Mat2& env, double t) {
    check_state(sys, "evolve(sys)");
    check_state(env, "evolve(env)");
    if (t < 0.0) throw std::invalid_argument("evolve: t must be nonnegative");
    const auto eig = linalg::hermitian_eig(model::total_hamiltonian(m));
    return evolve_impl(eig, linalg::kron(sys, env), t);
}

double heat_raw(const Mat2& env0, const Mat4& rho_t) {
    return env_energy(linalg::partial_trace(rho_t, Subsystem::Environment)) - env_energy(env0);
}

double dissipated_heat(const Mat2& env0, const Mat4& rho_t, double beta) {
    return beta * heat_raw(env0, rho_t);
}

double entropic_bound(const Mat2& sys0, const Mat4& rho_t) {
    return model::von_neumann_entropy(sys0) -
           model::von_neumann_entropy(linalg::partial_trace(rho_t, Subsystem::System));
}

double thermodynamic_bound(const InteractionModel& m, const Mat2& sys0, double beta, double t) {
    check_state(sys0, "thermodynamic_bound(sys0)");
    const auto eig = linalg::hermitian_eig(model::total_hamiltonian(m));
    const Mat4 u = linalg::propagator(eig, t);
    const double s = tpm_sum(u, sys0, beta);
    if (!(s > 0.0))
        throw std::runtime_error("thermodynamic_bound: nonpositive log argument (corrupted input)");
    return 0.0 - std::log(s);
}

KrausSet kraus_set(const InteractionModel& m, double beta, double t) {
    const model::ThermalWeights w = model::thermal_weights(beta);
    const double pop[2] = {w.p_excited, w.p_ground};
    const Mat4 u = linalg::propagator(model::total_hamiltonian(m), t);

    KrausSet k;
    k.operators.reserve(4);
    for (int nu = 0; nu < 2; ++nu)
        for (int mu = 0; mu < 2; ++mu) {
            Mat2 op = sandwich_block(u, nu, mu);
            const double root = std::sqrt(pop[mu]);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) op(r, c) *= root;
            k.operators.push_back(op);
        }

    Mat2 comp;
    for (const Mat2& op : k.operators) comp = comp + op.adjoint() * op;
    if ((comp - Mat2::identity()).max_abs() > 1e-12)
        throw std::runtime_error("kraus_set: completeness violated beyond 1e-12");
    return k;
}

Mat2 apply_kraus(const KrausSet& k, const Mat2& rho) {
    Mat2 out;
    for (const Mat2& op : k.operators) out = out + op * rho * op.adjoint();
    return out;
}

BoundsRecord evaluate_bounds(const InteractionModel& m, const Mat2& sys0, double beta, double t) {
    check_state(sys0, "evaluate_bounds(sys0)");
    if (t < 0.0) throw std::invalid_argument("evaluate_bounds: t must be nonnegative");

    const Mat2 env = model::thermal_state({beta});
    const Mat4 rho0 = linalg::kron(sys0, env);
    const auto eig = linalg::hermitian_eig(model::total_hamiltonian(m));
    const Mat4 rho_t = evolve_impl(eig, rho0, t);

    // Reduce the t = 0 state through the same partial-trace path as rho_t;
    // quantities then cancel exactly whenever the populations are untouched.
    const Mat2 env_ref = linalg::partial_trace(rho0, Subsystem::Environment);
    const Mat2 sys_ref = linalg::partial_trace(rho0, Subsystem::System);

    BoundsRecord r;
    r.t = t;
    r.beta_q = dissipated_heat(env_ref, rho_t, beta);
    r.delta_s = entropic_bound(sys_ref, rho_t);

    const Mat4 u = linalg::propagator(eig, t);
    const double s = tpm_sum(u, sys0, beta);
    if (!(s > 0.0))
        throw std::runtime_error("evaluate_bounds: nonpositive log argument (corrupted input)");
    r.thermo_b = 0.0 - std::log(s);
    return r;
}

} // namespace landauer::engine
