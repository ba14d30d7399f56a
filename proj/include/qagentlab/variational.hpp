#pragma once

#include "qagentlab/qsim.hpp"

#include <array>
#include <variant>

namespace qal::var {

struct PolicyParams {
    std::array<double, 4> theta{};
    std::array<double, 4> adam_m{};
    std::array<double, 4> adam_v{};
    long step_count = 0;
};

// Fixed 2-qubit policy ansatz without input encoding:
//   RY(t0) q0, RY(t1) q1, CZ(0,1), RY(t2) q0, RY(t3) q1
// The first layer uses RY (not RZ) so that all four angles influence the
// output distribution starting from |00>. The entangler is CZ: with a CNOT
// entangler the pi/4 initialization places most probability mass on the
// |00>/|11> corners and training absorbs at the second-best arm; CZ keeps
// the initial mass away from |11> and the policy reliably reaches the
// optimal arm.
struct BanditPolicy {};

// Entropy-feature policy ansatz:
//   RY(x0) q0, RY(x1) q1, RZ(t0) q0, RZ(t1) q1, CNOT(0,1), RY(t2) q0, RY(t3) q1
struct QiePolicy {
    std::array<double, 2> input{};
};

using PolicyCircuitSpec = std::variant<BanditPolicy, QiePolicy>;

qsim::Circuit build_policy_circuit(const PolicyCircuitSpec &spec,
                                   const std::array<double, 4> &theta);

// Exact output distribution over {00,01,10,11}.
std::array<double, 4> policy_probs(const PolicyCircuitSpec &spec,
                                   const PolicyParams &params);

// d pi(outcome) / d theta_j by the parameter-shift rule, exact for RY/RZ.
std::array<double, 4> policy_grad(const PolicyCircuitSpec &spec,
                                  const PolicyParams &params, int outcome_index);

// Standard Adam with beta1=0.9, beta2=0.999, eps=1e-8 and bias correction.
PolicyParams adam_step(PolicyParams params, const std::array<double, 4> &grad,
                       double lr);

} // namespace qal::var
