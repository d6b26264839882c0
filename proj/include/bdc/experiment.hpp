#pragma once

// Experiment documents: a model reference, grid and simulation settings, and an
// ordered task list. run_experiment executes the tasks and writes the artifacts.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bdc/hjb.hpp"
#include "bdc/model.hpp"

namespace bdc {

struct SimulationConfig {
    double t0 = 0.0;
    double horizon = 1.0;
    double h = 0.01;
    std::size_t n_reps = 1000;
    std::uint64_t seed_base = 1;
    std::size_t max_population = 1'000'000;
    double delta = 0.05;
    std::size_t threads = 0;
};

struct TaskSpec {
    std::string kind;  // solve | estimate | branching | dpp | dynkin | moment | couple | verify-all
    nlohmann::json body;
};

struct ExperimentConfig {
    std::string name;
    std::filesystem::path source;      // the experiment file
    std::filesystem::path model_path;  // resolved against the experiment file's directory
    ModelParams model;
    nlohmann::json model_doc;
    std::optional<GridConfig> grid;
    SimulationConfig sim;
    std::vector<TaskSpec> tasks;
    std::filesystem::path output_dir;
    nlohmann::json doc;  // the parsed document after overrides
};

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> reps;
    std::optional<std::size_t> threads;
    std::optional<std::filesystem::path> out;
};

/// Parses and checks the experiment file and the model it references. Throws
/// ParseError, IoError or ConfigError.
ExperimentConfig load_experiment(const std::filesystem::path& path, const Overrides& overrides = {});

/// Probe-lattice validation of the model over the grid domain (or [-5, 5]^d).
ValidationReport validate_experiment_model(const ExperimentConfig& cfg);

struct RunOutcome {
    bool all_pass = true;
    std::size_t n_checks = 0;
    nlohmann::json manifest;
};

/// Runs every task in order and writes manifest.json, one report per task,
/// summary.csv and auxiliary CSV/JSONL files into cfg.output_dir.
RunOutcome run_experiment(const ExperimentConfig& cfg, std::ostream& log);

/// Canonical digest of a configuration document.
std::string config_digest(const nlohmann::json& doc);

}  // namespace bdc
