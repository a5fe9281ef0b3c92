#include "landauer/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "landauer/rng.hpp"

namespace landauer::analysis {

using linalg::Mat2;
using model::InteractionModel;
using model::SystemStateParams;

double b_max(double v_z, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("b_max: beta must be positive");
    if (std::abs(v_z) > 1.0 + 1e-12) throw std::invalid_argument("b_max: |v_z| exceeds 1");
    v_z = std::clamp(v_z, -1.0, 1.0);

    // 1 - v_z tanh(beta) rewritten without cancellation: for v_z >= 0 the
    // expression (1 - v_z) + 2 v_z / (e^{2 beta} + 1) keeps full precision
    // even when v_z tanh(beta) -> 1.
    double arg;
    if (v_z >= 0.0) {
        const double e2b = std::exp(2.0 * beta);
        arg = (1.0 - v_z) + 2.0 * v_z / (e2b + 1.0);
    } else {
        arg = 1.0 - v_z * std::tanh(beta);
    }
    if (!(arg > 0.0)) throw std::runtime_error("b_max: nonpositive log argument");
    return 0.0 - std::log(arg);
}

namespace {

// ln cosh(beta), stable for any positive beta.
double log_cosh(double beta) {
    return beta + std::log1p(std::exp(-2.0 * beta)) - std::log(2.0);
}

} // namespace

DsMaxTerms ds_max_terms(double v_norm, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("ds_max: beta must be positive");
    if (v_norm < 0.0 || v_norm > 1.0 + 1e-12)
        throw std::invalid_argument("ds_max: v_norm outside [0, 1]");
    v_norm = std::min(v_norm, 1.0);

    DsMaxTerms r;
    r.ds_beta = beta * std::tanh(beta) - log_cosh(beta);

    // ln sqrt(1-v^2) + v atanh(v) == (1+v)/2 ln(1+v) + (1-v)/2 ln(1-v);
    // the right-hand form is finite at v = 1 where it equals ln 2.
    const double up = 0.5 * (1.0 + v_norm) * std::log1p(v_norm);
    const double down = v_norm < 1.0 ? 0.5 * (1.0 - v_norm) * std::log1p(-v_norm) : 0.0;
    r.ds_v = up + down;

    r.value = r.ds_beta - r.ds_v;
    return r;
}

MaxPointResult max_point(double alpha_sq, double w, double beta) {
    const SystemStateParams p{alpha_sq, w};
    const double vz = 1.0 - 2.0 * alpha_sq;
    const double vx = 2.0 * p.delta();
    const double vnorm = std::min(std::hypot(vx, vz), 1.0);

    MaxPointResult r;
    r.b_max = b_max(vz, beta);
    const DsMaxTerms d = ds_max_terms(vnorm, beta);
    r.ds_beta = d.ds_beta;
    r.ds_v = d.ds_v;
    r.ds_max = d.value;
    r.beta_q_max = beta * (vz + std::tanh(beta));
    return r;
}

double clausius_threshold(InteractionKind kind, double beta, std::optional<double> j_max) {
    if (!(beta > 0.0)) throw std::invalid_argument("clausius_threshold: beta must be positive");
    switch (kind) {
    case InteractionKind::XX:
        return 0.5 * (1.0 + std::tanh(beta));
    case InteractionKind::Ising: {
        if (!j_max || !(*j_max > 0.0))
            throw std::invalid_argument("clausius_threshold: Ising requires j_max > 0");
        const double ratio = *j_max / std::atan(*j_max / 2.0);
        return std::min(1.0, 0.5 * (1.0 + std::tanh(beta) * (ratio - 1.0)));
    }
    default:
        throw std::invalid_argument("clausius_threshold: no closed form for generic couplings");
    }
}

BoundaryCurve boundary_curve(double beta, const std::vector<double>& alpha_sq_grid) {
    BoundaryCurve out;
    for (double a : alpha_sq_grid) {
        if (a < 0.0 || a > 1.0)
            throw std::invalid_argument("boundary_curve: alpha_sq grid point outside [0, 1]");

        const double vz = 1.0 - 2.0 * a;
        const double dmax = std::sqrt(a * (1.0 - a));
        const double b = b_max(vz, beta);
        const auto f = [&](double delta) {
            const double v = std::min(std::hypot(2.0 * delta, vz), 1.0);
            return b - ds_max_terms(v, beta).value;
        };

        // Bracket scan over 64 uniform subintervals, then bisection.
        constexpr int kScan = 64;
        double lo = 0.0, hi = 0.0;
        double flo = f(0.0);
        bool found = false;
        if (flo == 0.0) {
            out.points.push_back({a, 0.0});
            continue;
        }
        for (int i = 1; i <= kScan; ++i) {
            const double d = dmax * static_cast<double>(i) / kScan;
            const double fd = f(d);
            if (flo * fd <= 0.0) {
                lo = dmax * static_cast<double>(i - 1) / kScan;
                hi = d;
                found = true;
                break;
            }
            flo = fd;
        }
        if (!found) {
            out.skipped.push_back(a);
            continue;
        }

        double mid = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (std::abs(fm) < 1e-10) break;
            if ((fm < 0.0) == (f(lo) < 0.0))
                lo = mid;
            else
                hi = mid;
        }
        out.points.push_back({a, mid});
    }
    return out;
}

std::string_view region_label_name(RegionLabel r) {
    switch (r) {
    case RegionLabel::NegativeHeat: return "NegativeHeat";
    case RegionLabel::BothBoundsNegative: return "BothBoundsNegative";
    case RegionLabel::ThermoTighter: return "ThermoTighter";
    case RegionLabel::EntropicTighter: return "EntropicTighter";
    case RegionLabel::Tie: return "Tie";
    }
    return "?";
}

RegionLabel classify_triplet(double beta_q, double ds, double b) {
    if (beta_q < -kRegionEps) return RegionLabel::NegativeHeat;
    if (b < -kRegionEps && ds < -kRegionEps) return RegionLabel::BothBoundsNegative;
    if (std::abs(b - ds) <= kRegionEps) return RegionLabel::Tie;
    return b > ds ? RegionLabel::ThermoTighter : RegionLabel::EntropicTighter;
}

RegionLabel classify_max_point(double alpha_sq, double w, double beta) {
    const MaxPointResult r = max_point(alpha_sq, w, beta);
    return classify_triplet(r.beta_q_max, r.ds_max, r.b_max);
}

namespace {

InteractionModel draw_model(InteractionKind kind, double j_max, rng::SplitMix64& g) {
    switch (kind) {
    case InteractionKind::XX: return InteractionModel::xx(j_max * g.u01());
    case InteractionKind::Ising: return InteractionModel::ising(j_max * g.u01());
    default:
        return InteractionModel::generic(j_max * g.u01(), j_max * g.u01(), j_max * g.u01());
    }
}

} // namespace

AveragedRecord averaged_bounds(InteractionKind kind, double alpha_sq, double w, double beta,
                               double j_max, int n_samples, double t_eval, std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("averaged_bounds: n_samples must be >= 1");
    if (!(j_max > 0.0)) throw std::invalid_argument("averaged_bounds: j_max must be positive");
    if (!(t_eval > 0.0)) throw std::invalid_argument("averaged_bounds: t_eval must be positive");

    const Mat2 sys = model::system_state({alpha_sq, w});

    double sum_q = 0.0, sum_ds = 0.0, sum_b = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        rng::SplitMix64 g = rng::sample_stream(seed, static_cast<std::uint64_t>(i));
        const InteractionModel m = draw_model(kind, j_max, g);
        const engine::BoundsRecord r = engine::evaluate_bounds(m, sys, beta, t_eval);
        sum_q += r.beta_q;
        sum_ds += r.delta_s;
        sum_b += r.thermo_b;
    }

    AveragedRecord rec;
    rec.mean_beta_q = sum_q / n_samples;
    rec.mean_ds = sum_ds / n_samples;
    rec.mean_b = sum_b / n_samples;
    rec.n_samples = n_samples;
    rec.j_max = j_max;
    rec.t_eval = t_eval;
    rec.seed = seed;
    return rec;
}

RegionLabel classify_averaged(InteractionKind kind, double alpha_sq, double w, double beta,
                              double j_max, int n_samples, double t_eval, std::uint64_t seed) {
    const AveragedRecord r =
        averaged_bounds(kind, alpha_sq, w, beta, j_max, n_samples, t_eval, seed);
    return classify_triplet(r.mean_beta_q, r.mean_ds, r.mean_b);
}

} // namespace landauer::analysis
