#pragma once

#include "qagentlab/bandit.hpp"
#include "qagentlab/qie.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace qal::harness {

// CLI / process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitReplayDiverged = 3;

struct ExperimentConfig {
    std::string agent; // grover | bandit | qie
    std::uint64_t seed = 0;
    std::filesystem::path output_dir = ".";

    // grover
    std::string target = "10";
    long shots = 1024;

    // bandit / qie
    std::map<std::string, double> arm_probs; // empty -> default_env()
    int episodes = 0;                        // 0 -> agent default
    double lr = 0.1;

    // qie; empty -> built-in constant 64x64 image
    std::filesystem::path image_path;
};

// Executes the selected agent and writes its trajectory CSV, any
// frequency CSV, and summary.json into output_dir. Returns an exit code.
int run_experiment(const ExperimentConfig &config);

struct ReplayResult {
    bool identical = false;
    std::string message;
};

// Re-runs the experiment from the metadata recorded in the log header and
// compares the regenerated log byte for byte.
ReplayResult replay(const std::filesystem::path &log_path);

// 64x64 all-128 grayscale image used when no input image is given.
qie::GrayImage builtin_constant_image();

// Round-trippable decimal formatting used in all emitted CSVs.
std::string format_double(double v);

} // namespace qal::harness
