// experiments.hpp — the experiment runners behind the command-line front
// end: time series, swap-time maxima, region maps, tightness surfaces,
// coupling-averaged records, and crossover curves. Every runner is a pure
// function of its config (seed included), so identical configs give
// byte-identical output files.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "landauer/analysis.hpp"
#include "landauer/io.hpp"

namespace landauer::cli {

// Invalid parameter; the message names the offending flag. Exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unwritable output path and friends. Exit code 3.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Region maps walk a deterministic (alpha_sq, delta) grid by default; the
// random mode draws seeded states instead, for parity with scatter-style
// sampling.
enum class StateSampling { Grid, Random };

struct ExperimentConfig {
    model::InteractionKind kind = model::InteractionKind::XX;
    double alpha_sq = 0.0;
    double w = 0.0;
    double beta = 1.0;
    double j = 1.0;              // coupling for pointwise commands
    double jx = 1.0, jy = 1.0, jz = 1.0; // generic couplings (--j "jx,jy,jz")
    double j_max = 1.0;          // averaged commands
    double t_max = -1.0;         // time window; < 0 picks the command default
    int steps = 400;
    int grid = 200;
    int samples = 500;
    std::uint64_t seed = 0;
    StateSampling state_sampling = StateSampling::Grid;
    std::string out;             // empty = stdout
    io::OutputFormat format = io::OutputFormat::Csv;
    unsigned threads = 0;        // 0 = hardware concurrency
};

model::InteractionModel pointwise_model(const ExperimentConfig& c);

io::Table run_evolve(const ExperimentConfig& c);
io::Table run_maxpoint(const ExperimentConfig& c);
io::Table run_regions(const ExperimentConfig& c);
io::Table run_surface(const ExperimentConfig& c);
io::Table run_average(const ExperimentConfig& c);
io::Table run_boundary(const ExperimentConfig& c);

// Write to c.out (or stdout when empty) in c.format.
void write_output(const io::Table& t, const ExperimentConfig& c);

// Full command-line entry point; returns the process exit code
// (0 success, 2 config error, 3 I/O error).
int cli_main(int argc, const char* const* argv);

} // namespace landauer::cli
