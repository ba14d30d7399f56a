#include "qagentlab/qie.hpp"
#include "qagentlab/qsim.hpp"
#include "qagentlab/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qal;
using qsim::cx;

namespace {

constexpr double kPi = std::numbers::pi;

// hand-coded 2x2 matrix-vector oracle, independent of the stride path
std::array<cx, 2> matvec2(const std::array<std::array<cx, 2>, 2> &m,
                          const std::array<cx, 2> &v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

qsim::Circuit random_circuit(int num_qubits, int num_gates,
                             std::mt19937_64 &rng) {
    qsim::Circuit c;
    c.num_qubits = num_qubits;
    std::uniform_int_distribution<int> kind(0, 7);
    std::uniform_int_distribution<int> qubit(0, num_qubits - 1);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < num_gates; ++i) {
        int a = qubit(rng);
        int b = qubit(rng);
        while (num_qubits > 1 && b == a)
            b = qubit(rng);
        switch (kind(rng)) {
        case 0: c.h(a); break;
        case 1: c.x(a); break;
        case 2: c.ry(a, angle(rng)); break;
        case 3: c.rz(a, angle(rng)); break;
        case 4: if (num_qubits > 1) c.cnot(a, b); else c.x(a); break;
        case 5: if (num_qubits > 1) c.cz(a, b); else c.h(a); break;
        case 6: if (num_qubits > 1) c.swap(a, b); else c.x(a); break;
        default: if (num_qubits > 1) c.cphase(a, b, angle(rng)); else c.rz(a, angle(rng));
        }
    }
    return c;
}

} // namespace

TEST_CASE("single-qubit gate examples") {
    qsim::Statevector s(1);
    s.apply(qsim::GateH{0});
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s.amplitudes()[0] - cx{r, 0}) < 1e-12);
    CHECK(std::abs(s.amplitudes()[1] - cx{r, 0}) < 1e-12);

    qsim::Statevector t(1);
    t.apply(qsim::GateX{0});
    CHECK(std::abs(t.amplitudes()[0]) < 1e-15);
    CHECK(std::abs(t.amplitudes()[1] - cx{1, 0}) < 1e-15);
}

TEST_CASE("RY(pi/2) matches the 2x2 matrix-vector oracle") {
    const double th = kPi / 2;
    const double c = std::cos(th / 2), sn = std::sin(th / 2);
    const std::array<std::array<cx, 2>, 2> ry = {{{cx{c, 0}, cx{-sn, 0}},
                                                  {cx{sn, 0}, cx{c, 0}}}};
    const auto expected = matvec2(ry, {cx{1, 0}, cx{0, 0}});

    qsim::Statevector s(1);
    s.apply(qsim::GateRY{0, th});
    CHECK(std::abs(s.amplitudes()[0] - expected[0]) < 1e-12);
    CHECK(std::abs(s.amplitudes()[1] - expected[1]) < 1e-12);
    CHECK(std::abs(s.amplitudes()[0].real() - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("probabilities: uniform superposition and basis states") {
    qsim::Statevector s(2);
    s.apply(qsim::GateH{0});
    s.apply(qsim::GateH{1});
    for (double p : qsim::probabilities(s))
        CHECK(p == doctest::Approx(0.25).epsilon(1e-12));

    // |10> means q0=1, q1=0 -> index 2 under the MSB-first convention
    qsim::Statevector t(2);
    t.apply(qsim::GateX{0});
    const auto probs = qsim::probabilities(t);
    CHECK(probs[0] == 0.0);
    CHECK(probs[1] == 0.0);
    CHECK(probs[2] == 1.0);
    CHECK(probs[3] == 0.0);
}

TEST_CASE("gate index validation") {
    qsim::Statevector s(2);
    CHECK_THROWS_AS(s.apply(qsim::GateH{2}), qsim::SimError);
    CHECK_THROWS_AS(s.apply(qsim::GateCNOT{0, 0}), qsim::SimError);
    CHECK_THROWS_AS(s.apply(qsim::GateSWAP{1, 3}), qsim::SimError);
}

TEST_CASE("sampling: deterministic outcomes and seeded reproducibility") {
    qsim::Statevector s11(2);
    s11.apply(qsim::GateX{0});
    s11.apply(qsim::GateX{1});
    auto rng = make_stream(42, Stream::Measurement);
    const auto hist = qsim::sample(s11, 100, rng);
    CHECK(hist.counts.at("11") == 100);
    CHECK(hist.total_shots == 100);

    qsim::Statevector s10(2);
    s10.apply(qsim::GateX{0});
    auto rng2 = make_stream(7, Stream::Measurement);
    CHECK(qsim::sample(s10, 1024, rng2).counts.at("10") == 1024);

    CHECK_THROWS(qsim::sample(s10, 0, rng2));
}

TEST_CASE("sampling: uniform state counts within the 5-sigma binomial bound") {
    qsim::Statevector s(2);
    s.apply(qsim::GateH{0});
    s.apply(qsim::GateH{1});
    auto rng = make_stream(123, Stream::Measurement);
    const auto hist = qsim::sample(s, 4096, rng);
    long total = 0;
    for (const auto &[bits, count] : hist.counts) {
        CHECK(std::abs(count - 1024) <= 200); // 5 sigma ~ 139
        total += count;
    }
    CHECK(total == 4096);
}

TEST_CASE("sampling is bit-exact for identical seeds") {
    auto rng_a = make_stream(99, Stream::Measurement);
    auto rng_b = make_stream(99, Stream::Measurement);
    auto circuit_rng = std::mt19937_64(5);
    const auto c = random_circuit(4, 30, circuit_rng);
    const auto state = qsim::run_circuit(c);
    CHECK(qsim::sample(state, 500, rng_a).counts ==
          qsim::sample(state, 500, rng_b).counts);
}

TEST_CASE("circuit_unitary: identity, Hadamard, size limit") {
    qsim::Circuit empty;
    empty.num_qubits = 1;
    const auto id = qsim::circuit_unitary(empty);
    CHECK(std::abs(id[0][0] - cx{1, 0}) < 1e-15);
    CHECK(std::abs(id[0][1]) < 1e-15);

    qsim::Circuit h;
    h.num_qubits = 1;
    h.h(0);
    const auto hu = qsim::circuit_unitary(h);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(hu[0][0] - cx{r, 0}) < 1e-12);
    CHECK(std::abs(hu[1][1] - cx{-r, 0}) < 1e-12);

    qsim::Circuit big;
    big.num_qubits = 7;
    CHECK_THROWS_AS(qsim::circuit_unitary(big), qsim::SimError);
}

TEST_CASE("4-qubit QFT equals the DFT matrix") {
    const auto u = qsim::circuit_unitary(qie::qft_circuit(4));
    const double norm = 1.0 / 4.0;
    for (int j = 0; j < 16; ++j)
        for (int k = 0; k < 16; ++k) {
            const cx expect = std::polar(norm, 2.0 * kPi * j * k / 16.0);
            CHECK(std::abs(u[j][k] - expect) < 1e-10);
        }
}

TEST_CASE("property: norm preservation on random circuits") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 1 + int(rng() % 6);
        const auto c = random_circuit(n, 50, rng);
        const auto state = qsim::run_circuit(c);
        CHECK(std::abs(state.norm_sq() - 1.0) < 1e-12);
    }
}

TEST_CASE("property: circuit_unitary is unitary for random circuits") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 1 + int(rng() % 4);
        const auto c = random_circuit(n, 20, rng);
        const auto u = qsim::circuit_unitary(c);
        const std::size_t dim = u.size();
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                cx dot{0, 0};
                for (std::size_t k = 0; k < dim; ++k)
                    dot += std::conj(u[k][i]) * u[k][j];
                const cx expect = (i == j) ? cx{1, 0} : cx{0, 0};
                CHECK(std::abs(dot - expect) < 1e-10);
            }
    }
}

TEST_CASE("property: self-inverse gate pairs recover the input state") {
    std::mt19937_64 rng(31);
    const auto prep = random_circuit(3, 15, rng);
    const auto before = qsim::run_circuit(prep);

    const std::vector<std::vector<qsim::GateOp>> pairs = {
        {qsim::GateH{1}, qsim::GateH{1}},
        {qsim::GateX{0}, qsim::GateX{0}},
        {qsim::GateCNOT{0, 2}, qsim::GateCNOT{0, 2}},
        {qsim::GateSWAP{1, 2}, qsim::GateSWAP{1, 2}},
    };
    for (const auto &pair : pairs) {
        auto s = before;
        for (const auto &op : pair)
            s.apply(op);
        for (std::size_t i = 0; i < s.dim(); ++i)
            CHECK(std::abs(s.amplitudes()[i] - before.amplitudes()[i]) < 1e-12);
    }
}

TEST_CASE("property: RY/RZ rotations invert with negated angle") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    const auto prep = random_circuit(2, 10, rng);
    const auto before = qsim::run_circuit(prep);
    for (int rep = 0; rep < 100; ++rep) {
        const double th = angle(rng);
        auto s = before;
        s.apply(qsim::GateRY{0, th});
        s.apply(qsim::GateRY{0, -th});
        s.apply(qsim::GateRZ{1, th});
        s.apply(qsim::GateRZ{1, -th});
        for (std::size_t i = 0; i < s.dim(); ++i)
            CHECK(std::abs(s.amplitudes()[i] - before.amplitudes()[i]) < 1e-12);
    }
}

TEST_CASE("stride path agrees with the matrix-product oracle") {
    std::mt19937_64 rng(4096);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 1 + int(rng() % 4);
        const auto c = random_circuit(n, 25, rng);
        const auto state = qsim::run_circuit(c);
        const auto u = qsim::circuit_unitary(c);
        for (std::size_t i = 0; i < state.dim(); ++i)
            CHECK(std::abs(state.amplitudes()[i] - u[i][0]) < 1e-10);
    }
}
