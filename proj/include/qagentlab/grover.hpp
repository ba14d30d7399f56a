#pragma once

#include "qagentlab/qsim.hpp"

#include <array>
#include <random>
#include <string>

namespace qal::grover {

struct GroverTask {
    std::string target; // one of 00, 01, 10, 11
    long shots = 1024;
};

// Phase oracle: X-conjugated CZ, diagonal with -1 exactly at the target index.
qsim::Circuit build_oracle(const std::string &target);

// H X CZ X H sandwich; equals 2|s><s| - I up to global phase.
qsim::Circuit build_diffuser();

// Full agent circuit: uniform superposition, oracle, diffuser.
qsim::Circuit build_circuit(const std::string &target);

struct Selection {
    std::string chosen;
    qsim::ShotHistogram histogram;
    std::array<double, 4> probabilities;
};

// One Grover iteration is exact at N=4, so chosen always equals the target.
// Ties (impossible here) resolve to the lexicographically smallest bitstring.
Selection select_action(const GroverTask &task, std::mt19937_64 &rng);

} // namespace qal::grover
