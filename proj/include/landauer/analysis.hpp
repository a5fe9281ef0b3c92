// analysis.hpp — closed-form swap-time maxima, Clausius thresholds, the
// transcendental crossover curve between the two bounds, region
// classification of initial states, and coupling-averaged experiments.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "landauer/engine.hpp"

namespace landauer::analysis {

using model::InteractionKind;

// Swap-time values for an XX-coupled pair: thermodynamic bound maximum,
// entropic bound maximum split into its temperature and state terms, and
// the heat maximum. ds_max = ds_beta - ds_v by construction; both terms lie
// in [0, ln 2].
struct MaxPointResult {
    double b_max = 0.0;
    double ds_max = 0.0;
    double ds_beta = 0.0;
    double ds_v = 0.0;
    double beta_q_max = 0.0;
};

// B_max = -ln(1 - v_z tanh beta), evaluated in a cancellation-free form.
double b_max(double v_z, double beta);

struct DsMaxTerms {
    double ds_beta = 0.0;
    double ds_v = 0.0;
    double value = 0.0; // ds_beta - ds_v
};

// ds_beta = beta tanh beta - ln cosh beta, ds_v = ln sqrt(1-|v|^2) +
// |v| atanh|v|; the v -> 1 limit of ds_v is ln 2.
DsMaxTerms ds_max_terms(double v_norm, double beta);

MaxPointResult max_point(double alpha_sq, double w, double beta);

// Largest ground-state population with nonnegative dissipated heat.
// XX: (1 + tanh beta)/2. Ising (coupling-averaged, long-time):
// [1 + tanh(beta) (J_max/atan(J_max/2) - 1)]/2, capped at one; j_max is
// required there.
double clausius_threshold(InteractionKind kind, double beta,
                          std::optional<double> j_max = std::nullopt);

// Points of the crossover curve b_max = ds_max in the (alpha_sq, delta)
// plane. Grid entries with no root in [0, alpha sqrt(1-alpha^2)] are
// omitted and reported in `skipped`.
struct BoundaryCurve {
    struct Point {
        double alpha_sq;
        double delta;
    };
    std::vector<Point> points;
    std::vector<double> skipped; // alpha_sq values with no sign change
};

BoundaryCurve boundary_curve(double beta, const std::vector<double>& alpha_sq_grid);

enum class RegionLabel { NegativeHeat, BothBoundsNegative, ThermoTighter, EntropicTighter, Tie };

std::string_view region_label_name(RegionLabel r);

// Classification tolerance shared by the closed-form and averaged paths.
inline constexpr double kRegionEps = 1e-9;

RegionLabel classify_triplet(double beta_q, double ds, double b);

// Closed-form XX path at the swap time.
RegionLabel classify_max_point(double alpha_sq, double w, double beta);

// Coupling-averaged quantities, Monte-Carlo over J drawn uniformly from
// (0, j_max); the generic kind draws all three couplings per sample. Each
// sample's stream is derived from (seed, sample index), so the record is
// reproducible for a fixed seed regardless of evaluation order.
struct AveragedRecord {
    double mean_beta_q = 0.0;
    double mean_ds = 0.0;
    double mean_b = 0.0;
    int n_samples = 0;
    double j_max = 0.0;
    double t_eval = 0.0;
    std::uint64_t seed = 0;
};

AveragedRecord averaged_bounds(InteractionKind kind, double alpha_sq, double w, double beta,
                               double j_max, int n_samples, double t_eval, std::uint64_t seed);

RegionLabel classify_averaged(InteractionKind kind, double alpha_sq, double w, double beta,
                              double j_max, int n_samples, double t_eval, std::uint64_t seed);

} // namespace landauer::analysis
