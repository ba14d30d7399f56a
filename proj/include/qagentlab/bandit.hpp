#pragma once

#include "qagentlab/variational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace qal::bandit {

inline const std::array<std::string, 4> kArms = {"00", "01", "10", "11"};

struct BanditConfig {
    std::map<std::string, double> probs; // arm bitstring -> reward probability
    int episodes = 100;
    double lr = 0.1;
    std::uint64_t seed = 0;
};

struct EpisodeRecord {
    int episode = 0; // 1-based
    std::string action;
    int reward = 0;
    long cumulative_reward = 0;
    std::array<double, 4> policy_probs{}; // distribution the action was drawn from
    std::array<double, 4> theta{};        // after the update
    std::array<double, 4> mean_reward{};  // incremental per-arm estimates
    std::array<long, 4> pull_count{};
};

// Arm 10 optimal at 0.8; the others sit in [0.2, 0.5].
BanditConfig default_env();

int pull_arm(const BanditConfig &config, const std::string &arm,
             std::mt19937_64 &rng);

// Cost J = -pi(a) on reward 1, +pi(a) on reward 0; Adam on the exact
// parameter-shift gradient. theta starts at [pi/4 x4].
std::vector<EpisodeRecord> train(const BanditConfig &config);

} // namespace qal::bandit
