#include "qagentlab/variational.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qal::var {

qsim::Circuit build_policy_circuit(const PolicyCircuitSpec &spec,
                                   const std::array<double, 4> &theta) {
    qsim::Circuit c;
    c.num_qubits = 2;
    std::visit(
        [&](const auto &s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, BanditPolicy>) {
                c.ry(0, theta[0]).ry(1, theta[1]).cz(0, 1);
            } else {
                c.ry(0, s.input[0]).ry(1, s.input[1]);
                c.rz(0, theta[0]).rz(1, theta[1]).cnot(0, 1);
            }
            c.ry(0, theta[2]).ry(1, theta[3]);
        },
        spec);
    return c;
}

namespace {

std::array<double, 4> probs_at(const PolicyCircuitSpec &spec,
                               const std::array<double, 4> &theta) {
    const auto p = qsim::probabilities(
        qsim::run_circuit(build_policy_circuit(spec, theta)));
    return {p[0], p[1], p[2], p[3]};
}

} // namespace

std::array<double, 4> policy_probs(const PolicyCircuitSpec &spec,
                                   const PolicyParams &params) {
    return probs_at(spec, params.theta);
}

std::array<double, 4> policy_grad(const PolicyCircuitSpec &spec,
                                  const PolicyParams &params,
                                  int outcome_index) {
    if (outcome_index < 0 || outcome_index > 3)
        throw std::out_of_range("outcome_index must be in [0,3]");
    const double shift = std::numbers::pi / 2.0;
    std::array<double, 4> grad{};
    for (int j = 0; j < 4; ++j) {
        auto plus = params.theta;
        auto minus = params.theta;
        plus[j] += shift;
        minus[j] -= shift;
        grad[j] = (probs_at(spec, plus)[outcome_index] -
                   probs_at(spec, minus)[outcome_index]) /
                  2.0;
    }
    return grad;
}

PolicyParams adam_step(PolicyParams params, const std::array<double, 4> &grad,
                       double lr) {
    constexpr double beta1 = 0.9;
    constexpr double beta2 = 0.999;
    constexpr double eps = 1e-8;

    for (double g : grad)
        if (!std::isfinite(g))
            throw std::runtime_error("optimizer error: non-finite gradient");

    params.step_count += 1;
    const double t = static_cast<double>(params.step_count);
    const double bc1 = 1.0 - std::pow(beta1, t);
    const double bc2 = 1.0 - std::pow(beta2, t);
    for (int j = 0; j < 4; ++j) {
        params.adam_m[j] = beta1 * params.adam_m[j] + (1.0 - beta1) * grad[j];
        params.adam_v[j] =
            beta2 * params.adam_v[j] + (1.0 - beta2) * grad[j] * grad[j];
        const double m_hat = params.adam_m[j] / bc1;
        const double v_hat = params.adam_v[j] / bc2;
        params.theta[j] -= lr * m_hat / (std::sqrt(v_hat) + eps);
    }
    return params;
}

} // namespace qal::var
