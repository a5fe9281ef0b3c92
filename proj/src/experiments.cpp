#include "landauer/experiments.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "landauer/rng.hpp"

namespace landauer::cli {

using analysis::RegionLabel;
using io::Cell;
using io::Table;
using linalg::Mat2;
using model::InteractionKind;
using model::InteractionModel;

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Index-parallel map; results land in caller-owned slots, so row order is
// independent of scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) {
        pool.emplace_back([&, k]() {
            for (std::size_t i = k; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

void require(bool ok, const char* message) {
    if (!ok) throw config_error(message);
}

double default_t_max(const ExperimentConfig& c) {
    if (c.t_max >= 0.0) return c.t_max;
    if (c.kind == InteractionKind::XX && c.j > 0.0)
        return std::numbers::pi / (2.0 * c.j); // one population period
    return 20.0;
}

double swap_time(double j) { return std::numbers::pi / (4.0 * j); }

} // namespace

InteractionModel pointwise_model(const ExperimentConfig& c) {
    switch (c.kind) {
    case InteractionKind::XX: return InteractionModel::xx(c.j);
    case InteractionKind::Ising: return InteractionModel::ising(c.j);
    default: return InteractionModel::generic(c.jx, c.jy, c.jz);
    }
}

Table run_evolve(const ExperimentConfig& c) {
    require(c.steps >= 1, "--steps must be >= 1");
    require(c.beta > 0.0, "--beta must be positive");
    const double t_max = default_t_max(c);
    require(t_max >= 0.0, "--t-max must be nonnegative");

    const Mat2 sys = model::system_state({c.alpha_sq, c.w});
    const InteractionModel m = pointwise_model(c);

    const std::size_t rows = static_cast<std::size_t>(c.steps) + 1;
    std::vector<engine::BoundsRecord> recs(rows);
    parallel_for(rows, c.threads, [&](std::size_t i) {
        const double t = t_max * static_cast<double>(i) / c.steps;
        recs[i] = engine::evaluate_bounds(m, sys, c.beta, t);
    });

    Table t({"t", "beta_q", "delta_s", "thermo_b"});
    for (const auto& r : recs) t.add_row({r.t, r.beta_q, r.delta_s, r.thermo_b});
    return t;
}

Table run_maxpoint(const ExperimentConfig& c) {
    require(c.beta > 0.0, "--beta must be positive");
    require(c.j > 0.0, "--j must be positive for the swap-time evaluation");

    const analysis::MaxPointResult cf = analysis::max_point(c.alpha_sq, c.w, c.beta);
    const Mat2 sys = model::system_state({c.alpha_sq, c.w});
    const engine::BoundsRecord td =
        engine::evaluate_bounds(InteractionModel::xx(c.j), sys, c.beta, swap_time(c.j));

    Table t({"alpha_sq", "w", "beta", "beta_q_max", "ds_max", "b_max", "beta_q_max_td",
             "ds_max_td", "b_max_td", "diff_beta_q", "diff_ds", "diff_b"});
    t.add_row({c.alpha_sq, c.w, c.beta, cf.beta_q_max, cf.ds_max, cf.b_max, td.beta_q,
               td.delta_s, td.thermo_b, std::abs(cf.beta_q_max - td.beta_q),
               std::abs(cf.ds_max - td.delta_s), std::abs(cf.b_max - td.thermo_b)});
    return t;
}

Table run_regions(const ExperimentConfig& c) {
    require(c.grid >= 2, "--grid must be >= 2");
    require(c.beta > 0.0, "--beta must be positive");
    const bool averaged = c.kind != InteractionKind::XX;
    if (averaged) {
        require(c.samples >= 1, "--samples must be >= 1");
        require(c.j_max > 0.0, "--j-max must be positive");
    }
    const double t_eval = c.t_max >= 0.0 ? c.t_max : 1000.0;
    if (averaged) require(t_eval > 0.0, "--t-max (evaluation time) must be positive");

    const int g = c.grid;
    const std::size_t cells = static_cast<std::size_t>(g) * static_cast<std::size_t>(g);
    struct Row {
        bool admissible = false;
        double alpha_sq = 0.0;
        double delta = 0.0;
        RegionLabel label = RegionLabel::Tie;
    };
    std::vector<Row> rows(cells);

    // Disjoint from the coupling streams inside averaged_bounds.
    constexpr std::uint64_t kStateTag = 0x517cc1b727220a95ULL;

    parallel_for(cells, c.threads, [&](std::size_t idx) {
        double a, w, d;
        if (c.state_sampling == StateSampling::Grid) {
            const int i = static_cast<int>(idx) / g;
            const int jj = static_cast<int>(idx) % g;
            a = static_cast<double>(i) / (g - 1);
            d = 0.5 * static_cast<double>(jj) / (g - 1);
            const double dmax = std::sqrt(a * (1.0 - a));
            if (d > dmax + 1e-15) return;
            w = dmax > 0.0 ? std::min(1.0, d / dmax) : 0.0;
        } else {
            auto s = rng::sample_stream(c.seed ^ kStateTag, idx);
            a = s.u01();
            w = s.u01();
            d = model::SystemStateParams{a, w}.delta();
        }

        Row& r = rows[idx];
        r.admissible = true;
        r.alpha_sq = a;
        r.delta = d;
        r.label = averaged ? analysis::classify_averaged(c.kind, a, w, c.beta, c.j_max,
                                                         c.samples, t_eval, c.seed)
                           : analysis::classify_max_point(a, w, c.beta);
    });

    Table t({"alpha_sq", "delta", "label"});
    for (const Row& r : rows)
        if (r.admissible)
            t.add_row({r.alpha_sq, r.delta, std::string(analysis::region_label_name(r.label))});
    return t;
}

Table run_surface(const ExperimentConfig& c) {
    require(c.grid >= 2, "--grid must be >= 2");
    const int g = c.grid;
    constexpr double kBetaMin = 0.1;
    constexpr double kBetaMax = 10.0;

    struct Row {
        double alpha_sq, beta, q_max, b_over, ds_over;
    };
    const std::size_t cells = static_cast<std::size_t>(g) * static_cast<std::size_t>(g);
    std::vector<Row> rows(cells);
    parallel_for(cells, c.threads, [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / g;
        const int jj = static_cast<int>(idx) % g;
        const double a = static_cast<double>(i) / (g - 1);
        const double beta = kBetaMin + (kBetaMax - kBetaMin) * static_cast<double>(jj) / (g - 1);
        const analysis::MaxPointResult r = analysis::max_point(a, c.w, beta);
        rows[idx] = {a, beta, r.beta_q_max / beta, r.b_max / beta, r.ds_max / beta};
    });

    Table t({"alpha_sq", "beta", "q_max", "b_max_over_beta", "ds_max_over_beta"});
    for (const Row& r : rows) t.add_row({r.alpha_sq, r.beta, r.q_max, r.b_over, r.ds_over});
    return t;
}

Table run_average(const ExperimentConfig& c) {
    require(c.samples >= 1, "--samples must be >= 1");
    require(c.j_max > 0.0, "--j-max must be positive");
    require(c.beta > 0.0, "--beta must be positive");
    const double t_eval = c.t_max >= 0.0 ? c.t_max : 1000.0;
    require(t_eval > 0.0, "--t-max (evaluation time) must be positive");

    const analysis::AveragedRecord r = analysis::averaged_bounds(
        c.kind, c.alpha_sq, c.w, c.beta, c.j_max, c.samples, t_eval, c.seed);

    Table t({"alpha_sq", "w", "beta", "j_max", "n", "t_eval", "seed", "mean_beta_q", "mean_ds",
             "mean_b"});
    t.add_row({c.alpha_sq, c.w, c.beta, r.j_max, static_cast<std::int64_t>(r.n_samples),
               r.t_eval, static_cast<std::int64_t>(r.seed), r.mean_beta_q, r.mean_ds, r.mean_b});
    return t;
}

Table run_boundary(const ExperimentConfig& c) {
    require(c.grid >= 2, "--grid must be >= 2");
    require(c.beta > 0.0, "--beta must be positive");

    std::vector<double> grid(static_cast<std::size_t>(c.grid));
    for (int i = 0; i < c.grid; ++i)
        grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / (c.grid - 1);

    const analysis::BoundaryCurve curve = analysis::boundary_curve(c.beta, grid);
    if (!curve.skipped.empty())
        std::cerr << "boundary: no crossover for " << curve.skipped.size()
                  << " of " << c.grid << " grid values\n";

    Table t({"alpha_sq", "delta"});
    for (const auto& p : curve.points) t.add_row({p.alpha_sq, p.delta});
    return t;
}

void write_output(const Table& t, const ExperimentConfig& c) {
    if (c.out.empty()) {
        t.emit(std::cout, c.format);
        if (!std::cout) throw io_error("failed writing to stdout");
        return;
    }
    std::ofstream os(c.out, std::ios::binary);
    if (!os) throw io_error("cannot open output file '" + c.out + "'");
    t.emit(os, c.format);
    os.flush();
    if (!os) throw io_error("failed writing output file '" + c.out + "'");
}

namespace {

InteractionKind parse_kind(const std::string& s) {
    if (s == "xx") return InteractionKind::XX;
    if (s == "ising") return InteractionKind::Ising;
    if (s == "generic") return InteractionKind::Generic;
    throw config_error("--model must be one of xx|ising|generic");
}

// --j takes either a single value or "jx,jy,jz" for the generic model.
void parse_coupling(const std::string& s, ExperimentConfig& c) {
    std::vector<double> vals;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            vals.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw config_error("--j expects numeric values, got '" + item + "'");
        }
    }
    if (vals.size() == 1) {
        c.j = vals[0];
        c.jx = c.jy = c.jz = vals[0];
    } else if (vals.size() == 3) {
        c.jx = vals[0];
        c.jy = vals[1];
        c.jz = vals[2];
        c.j = vals[0];
    } else {
        throw config_error("--j takes one value, or 'jx,jy,jz' for --model generic");
    }
}

void add_common_flags(CLI::App* cmd, ExperimentConfig& c, std::string& model_str,
                      std::string& j_str, std::string& format_str, std::string& sampling_str) {
    cmd->add_option("--model", model_str, "interaction model: xx|ising|generic");
    cmd->add_option("--alpha-sq", c.alpha_sq, "ground-state population of the initial system");
    cmd->add_option("--w", c.w, "coherence fraction of the initial system");
    cmd->add_option("--beta", c.beta, "inverse environment temperature");
    cmd->add_option("--j", j_str, "coupling (single value, or jx,jy,jz for generic)");
    cmd->add_option("--j-max", c.j_max, "upper edge of the coupling interval (averaged runs)");
    cmd->add_option("--t-max", c.t_max, "time window / evaluation time");
    cmd->add_option("--steps", c.steps, "time steps in the window");
    cmd->add_option("--grid", c.grid, "grid resolution per axis");
    cmd->add_option("--samples", c.samples, "Monte-Carlo sample count");
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--state-sampling", sampling_str,
                    "region-map state sampling: grid|random (seeded)");
    cmd->add_option("--out", c.out, "output path (default: stdout)");
    cmd->add_option("--format", format_str, "output format: csv|json");
    cmd->add_option("--threads", c.threads, "worker threads (default: available parallelism)");
}

StateSampling parse_sampling(const std::string& s) {
    if (s == "grid") return StateSampling::Grid;
    if (s == "random") return StateSampling::Random;
    throw config_error("--state-sampling must be 'grid' or 'random'");
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"exact two-qubit heat-bound simulator"};
    app.require_subcommand(1);

    ExperimentConfig c;
    std::string model_str = "xx";
    std::string j_str = "1";
    std::string format_str = "csv";
    std::string sampling_str = "grid";

    struct Cmd {
        const char* name;
        const char* help;
        Table (*run)(const ExperimentConfig&);
    };
    const Cmd cmds[] = {
        {"evolve", "time series of beta<Q>, dS, and B", run_evolve},
        {"maxpoint", "closed-form vs time-domain values at the swap time", run_maxpoint},
        {"regions", "region classification over the (alpha_sq, delta) plane", run_regions},
        {"surface", "tightness surfaces over (alpha_sq, beta)", run_surface},
        {"average", "coupling-averaged bounds record", run_average},
        {"boundary", "crossover curve b_max = ds_max", run_boundary},
    };
    for (const Cmd& k : cmds) {
        CLI::App* sub = app.add_subcommand(k.name, k.help);
        add_common_flags(sub, c, model_str, j_str, format_str, sampling_str);
        sub->callback([&c, &model_str, &j_str, &format_str, &sampling_str, run = k.run]() {
            c.kind = parse_kind(model_str);
            parse_coupling(j_str, c);
            c.state_sampling = parse_sampling(sampling_str);
            c.format = [&] {
                try {
                    return io::parse_format(format_str);
                } catch (const std::exception&) {
                    throw config_error("--format must be 'csv' or 'json'");
                }
            }();
            write_output(run(c), c);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const config_error& e) {
        std::cerr << "error: invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid parameter: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace landauer::cli
