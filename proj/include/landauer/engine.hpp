// engine.hpp — exact two-qubit dynamics and the three central quantities:
// dissipated heat beta<Q>, the entropic bound dS, and the thermodynamic
// bound B, plus extraction of the Kraus map acting on the system.

#pragma once

#include <vector>

#include "landauer/model.hpp"

namespace landauer::engine {

using linalg::Mat2;
using linalg::Mat4;
using model::InteractionModel;

// Quantities at one time point (or one averaged experiment). All three
// vanish at t = 0, and delta_s <= beta_q and thermo_b <= beta_q up to
// numerical slack.
struct BoundsRecord {
    double t = 0.0;
    double beta_q = 0.0;  // beta <Q>
    double delta_s = 0.0; // S(rho_S(0)) - S(rho_S(t)), nats
    double thermo_b = 0.0;
};

// Kraus operators M_{nu,mu} = sqrt(p_mu) <nu|U|mu>, indexed over environment
// eigenstate pairs in row-major (nu, mu) order. Satisfies
// sum M^dag M = 1 within 1e-12.
struct KrausSet {
    std::vector<Mat2> operators;
};

// rho(t) = U (sys (x) env) U^dag. Evolved eigenvalues in [-1e-9, -1e-12)
// are clamped to zero with trace renormalization; below -1e-9 is an error.
Mat4 evolve(const InteractionModel& m, const Mat2& sys, const Mat2& env, double t);

// beta Tr[H_E (rho_E(t) - rho_E(0))] with H_E = sigma_z.
double dissipated_heat(const Mat2& env0, const Mat4& rho_t, double beta);

// Raw <Q> without the beta factor.
double heat_raw(const Mat2& env0, const Mat4& rho_t);

double entropic_bound(const Mat2& sys0, const Mat4& rho_t);

// B = -ln sum_{nu,mu} (e^{-beta E_nu}/Z) Tr[<nu|U|mu> rho_S(0) <mu|U^dag|nu>],
// the two-point-measurement form of -ln<e^{-beta Q}>. The thermal factor
// sits on the final environment eigenstate; this is the choice that
// reproduces the closed-form maximum -ln(1 - v_z tanh beta) at the XX swap
// time. Throws if the log argument is not positive.
double thermodynamic_bound(const InteractionModel& m, const Mat2& sys0, double beta, double t);

KrausSet kraus_set(const InteractionModel& m, double beta, double t);

// sum_i K_i rho K_i^dag.
Mat2 apply_kraus(const KrausSet& k, const Mat2& rho);

// All three quantities from one propagation, with the environment prepared
// thermally at inverse temperature beta.
BoundsRecord evaluate_bounds(const InteractionModel& m, const Mat2& sys0, double beta, double t);

} // namespace landauer::engine
