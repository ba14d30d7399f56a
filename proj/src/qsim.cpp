#include "qagentlab/qsim.hpp"
#include "qagentlab/rng.hpp"

#include <algorithm>
#include <cmath>

namespace qal::qsim {

namespace {

void check_index(int q, int num_qubits) {
    if (q < 0 || q >= num_qubits)
        throw SimError("invalid gate: qubit index " + std::to_string(q) +
                       " out of range for " + std::to_string(num_qubits) +
                       " qubits");
}

void check_pair(int a, int b, int num_qubits) {
    check_index(a, num_qubits);
    check_index(b, num_qubits);
    if (a == b)
        throw SimError("invalid gate: two-qubit gate needs distinct qubits");
}

} // namespace

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 10)
        throw SimError("num_qubits must be in [1,10]");
    amps_.assign(std::size_t(1) << num_qubits, cx{0.0, 0.0});
    amps_[0] = cx{1.0, 0.0};
}

double Statevector::norm_sq() const {
    double s = 0.0;
    for (const auto &a : amps_)
        s += std::norm(a);
    return s;
}

void Statevector::apply(const GateOp &op) {
    const int n = num_qubits_;
    const std::size_t dim = amps_.size();

    // qubit q occupies bit (n-1-q) of the state index (q0 is MSB)
    auto bit_of = [n](int q) { return std::size_t(1) << (n - 1 - q); };

    // iterate over index pairs (i, i|mask) for a single target bit
    auto for_pairs = [&](std::size_t mask, auto &&body) {
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & mask) == 0)
                body(i, i | mask);
    };

    std::visit(
        [&](const auto &g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, GateH>) {
                check_index(g.q, n);
                const double r = 1.0 / std::sqrt(2.0);
                for_pairs(bit_of(g.q), [&](std::size_t i0, std::size_t i1) {
                    cx a = amps_[i0], b = amps_[i1];
                    amps_[i0] = r * (a + b);
                    amps_[i1] = r * (a - b);
                });
            } else if constexpr (std::is_same_v<G, GateX>) {
                check_index(g.q, n);
                for_pairs(bit_of(g.q), [&](std::size_t i0, std::size_t i1) {
                    std::swap(amps_[i0], amps_[i1]);
                });
            } else if constexpr (std::is_same_v<G, GateRY>) {
                check_index(g.q, n);
                const double c = std::cos(g.angle / 2.0);
                const double s = std::sin(g.angle / 2.0);
                for_pairs(bit_of(g.q), [&](std::size_t i0, std::size_t i1) {
                    cx a = amps_[i0], b = amps_[i1];
                    amps_[i0] = c * a - s * b;
                    amps_[i1] = s * a + c * b;
                });
            } else if constexpr (std::is_same_v<G, GateRZ>) {
                check_index(g.q, n);
                const cx p0 = std::polar(1.0, -g.angle / 2.0);
                const cx p1 = std::polar(1.0, g.angle / 2.0);
                for_pairs(bit_of(g.q), [&](std::size_t i0, std::size_t i1) {
                    amps_[i0] *= p0;
                    amps_[i1] *= p1;
                });
            } else if constexpr (std::is_same_v<G, GateCNOT>) {
                check_pair(g.control, g.target, n);
                const std::size_t cm = bit_of(g.control);
                const std::size_t tm = bit_of(g.target);
                for (std::size_t i = 0; i < dim; ++i)
                    if ((i & cm) && !(i & tm))
                        std::swap(amps_[i], amps_[i | tm]);
            } else if constexpr (std::is_same_v<G, GateCZ>) {
                check_pair(g.control, g.target, n);
                const std::size_t m = bit_of(g.control) | bit_of(g.target);
                for (std::size_t i = 0; i < dim; ++i)
                    if ((i & m) == m)
                        amps_[i] = -amps_[i];
            } else if constexpr (std::is_same_v<G, GateSWAP>) {
                check_pair(g.a, g.b, n);
                const std::size_t am = bit_of(g.a);
                const std::size_t bm = bit_of(g.b);
                for (std::size_t i = 0; i < dim; ++i)
                    if ((i & am) && !(i & bm))
                        std::swap(amps_[i], amps_[(i & ~am) | bm]);
            } else if constexpr (std::is_same_v<G, GateCPhase>) {
                check_pair(g.control, g.target, n);
                const std::size_t m = bit_of(g.control) | bit_of(g.target);
                const cx p = std::polar(1.0, g.phi);
                for (std::size_t i = 0; i < dim; ++i)
                    if ((i & m) == m)
                        amps_[i] *= p;
            }
        },
        op);
}

Statevector apply_gate(Statevector state, const GateOp &op) {
    state.apply(op);
    return state;
}

Statevector run_circuit(const Circuit &circuit) {
    Statevector state(circuit.num_qubits);
    for (const auto &op : circuit.ops)
        state.apply(op);
    return state;
}

std::vector<double> probabilities(const Statevector &state) {
    std::vector<double> probs(state.dim());
    for (std::size_t i = 0; i < probs.size(); ++i)
        probs[i] = std::norm(state.amplitudes()[i]);
    return probs;
}

std::string index_to_bitstring(std::size_t index, int num_qubits) {
    std::string bits(num_qubits, '0');
    for (int q = 0; q < num_qubits; ++q)
        if (index & (std::size_t(1) << (num_qubits - 1 - q)))
            bits[q] = '1';
    return bits;
}

std::size_t bitstring_to_index(const std::string &bits) {
    std::size_t i = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw SimError("malformed bitstring: " + bits);
        i = (i << 1) | std::size_t(c - '0');
    }
    return i;
}

ShotHistogram sample(const Statevector &state, long shots, std::mt19937_64 &rng) {
    if (shots < 1)
        throw SimError("empty measurement: shots must be >= 1");
    const auto probs = probabilities(state);
    ShotHistogram hist;
    hist.total_shots = shots;
    for (long s = 0; s < shots; ++s) {
        const double u = uniform01(rng);
        double acc = 0.0;
        std::size_t pick = probs.size() - 1;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) {
                pick = i;
                break;
            }
        }
        ++hist.counts[index_to_bitstring(pick, state.num_qubits())];
    }
    return hist;
}

namespace {

Unitary identity(std::size_t dim) {
    Unitary m(dim, std::vector<cx>(dim, cx{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i)
        m[i][i] = cx{1.0, 0.0};
    return m;
}

Unitary matmul(const Unitary &a, const Unitary &b) {
    const std::size_t dim = a.size();
    Unitary out(dim, std::vector<cx>(dim, cx{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            const cx aik = a[i][k];
            if (aik == cx{0.0, 0.0})
                continue;
            for (std::size_t j = 0; j < dim; ++j)
                out[i][j] += aik * b[k][j];
        }
    return out;
}

// Embed a 2x2 matrix acting on qubit q into the full 2^n unitary.
Unitary embed1(const cx m[2][2], int q, int n) {
    const std::size_t dim = std::size_t(1) << n;
    const std::size_t mask = std::size_t(1) << (n - 1 - q);
    Unitary out(dim, std::vector<cx>(dim, cx{0.0, 0.0}));
    for (std::size_t col = 0; col < dim; ++col) {
        const int b = (col & mask) ? 1 : 0;
        out[col & ~mask][col] += m[0][b];
        out[col | mask][col] += m[1][b];
    }
    return out;
}

// Embed a 4x4 matrix acting on qubits (qa, qb), qa the higher-order bit of
// the 2-bit subspace index.
Unitary embed2(const cx m[4][4], int qa, int qb, int n) {
    const std::size_t dim = std::size_t(1) << n;
    const std::size_t ma = std::size_t(1) << (n - 1 - qa);
    const std::size_t mb = std::size_t(1) << (n - 1 - qb);
    Unitary out(dim, std::vector<cx>(dim, cx{0.0, 0.0}));
    for (std::size_t col = 0; col < dim; ++col) {
        const int sub = ((col & ma) ? 2 : 0) | ((col & mb) ? 1 : 0);
        const std::size_t base = col & ~(ma | mb);
        for (int row = 0; row < 4; ++row) {
            if (m[row][sub] == cx{0.0, 0.0})
                continue;
            const std::size_t r =
                base | ((row & 2) ? ma : 0) | ((row & 1) ? mb : 0);
            out[r][col] += m[row][sub];
        }
    }
    return out;
}

Unitary gate_unitary(const GateOp &op, int n) {
    const double r = 1.0 / std::sqrt(2.0);
    return std::visit(
        [&](const auto &g) -> Unitary {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, GateH>) {
                const cx m[2][2] = {{r, r}, {r, -r}};
                return embed1(m, g.q, n);
            } else if constexpr (std::is_same_v<G, GateX>) {
                const cx m[2][2] = {{0, 1}, {1, 0}};
                return embed1(m, g.q, n);
            } else if constexpr (std::is_same_v<G, GateRY>) {
                const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
                const cx m[2][2] = {{c, -s}, {s, c}};
                return embed1(m, g.q, n);
            } else if constexpr (std::is_same_v<G, GateRZ>) {
                const cx m[2][2] = {{std::polar(1.0, -g.angle / 2), 0},
                                    {0, std::polar(1.0, g.angle / 2)}};
                return embed1(m, g.q, n);
            } else if constexpr (std::is_same_v<G, GateCNOT>) {
                const cx m[4][4] = {{1, 0, 0, 0},
                                    {0, 1, 0, 0},
                                    {0, 0, 0, 1},
                                    {0, 0, 1, 0}};
                return embed2(m, g.control, g.target, n);
            } else if constexpr (std::is_same_v<G, GateCZ>) {
                const cx m[4][4] = {{1, 0, 0, 0},
                                    {0, 1, 0, 0},
                                    {0, 0, 1, 0},
                                    {0, 0, 0, -1}};
                return embed2(m, g.control, g.target, n);
            } else if constexpr (std::is_same_v<G, GateSWAP>) {
                const cx m[4][4] = {{1, 0, 0, 0},
                                    {0, 0, 1, 0},
                                    {0, 1, 0, 0},
                                    {0, 0, 0, 1}};
                return embed2(m, g.a, g.b, n);
            } else {
                static_assert(std::is_same_v<G, GateCPhase>);
                const cx m[4][4] = {{1, 0, 0, 0},
                                    {0, 1, 0, 0},
                                    {0, 0, 1, 0},
                                    {0, 0, 0, std::polar(1.0, g.phi)}};
                return embed2(m, g.control, g.target, n);
            }
        },
        op);
}

} // namespace

Unitary circuit_unitary(const Circuit &circuit) {
    if (circuit.num_qubits > 6)
        throw SimError("circuit_unitary limited to 6 qubits");
    if (circuit.num_qubits < 1)
        throw SimError("circuit_unitary needs at least 1 qubit");
    Unitary u = identity(std::size_t(1) << circuit.num_qubits);
    for (const auto &op : circuit.ops)
        u = matmul(gate_unitary(op, circuit.num_qubits), u);
    return u;
}

} // namespace qal::qsim
