#include "qagentlab/grover.hpp"

namespace qal::grover {

namespace {

void check_target(const std::string &target) {
    if (target.size() != 2 ||
        (target.find_first_not_of("01") != std::string::npos))
        throw qsim::SimError("grover target must be a 2-bit string, got '" +
                             target + "'");
}

} // namespace

qsim::Circuit build_oracle(const std::string &target) {
    check_target(target);
    qsim::Circuit c;
    c.num_qubits = 2;
    for (int q = 0; q < 2; ++q)
        if (target[q] == '0')
            c.x(q);
    c.cz(0, 1);
    for (int q = 0; q < 2; ++q)
        if (target[q] == '0')
            c.x(q);
    return c;
}

qsim::Circuit build_diffuser() {
    qsim::Circuit c;
    c.num_qubits = 2;
    c.h(0).h(1).x(0).x(1).cz(0, 1).x(0).x(1).h(0).h(1);
    return c;
}

qsim::Circuit build_circuit(const std::string &target) {
    check_target(target);
    qsim::Circuit c;
    c.num_qubits = 2;
    c.h(0).h(1);
    for (const auto &op : build_oracle(target).ops)
        c.ops.push_back(op);
    for (const auto &op : build_diffuser().ops)
        c.ops.push_back(op);
    return c;
}

Selection select_action(const GroverTask &task, std::mt19937_64 &rng) {
    const auto state = qsim::run_circuit(build_circuit(task.target));
    const auto probs = qsim::probabilities(state);

    Selection sel;
    sel.probabilities = {probs[0], probs[1], probs[2], probs[3]};
    sel.histogram = qsim::sample(state, task.shots, rng);

    long best = -1;
    for (const auto &[bits, count] : sel.histogram.counts) {
        if (count > best) { // std::map iterates lexicographically, ties keep first
            best = count;
            sel.chosen = bits;
        }
    }
    return sel;
}

} // namespace qal::grover
