#include "qagentlab/qie.hpp"
#include "qagentlab/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qal::qie {

namespace {

void check_nibble(std::uint8_t v, const char *what) {
    if (v > 15)
        throw std::invalid_argument(std::string(what) + " must be in [0,15]");
}

void check_image(const GrayImage &img) {
    if (img.width <= 0 || img.height <= 0 || img.pixels.empty())
        throw std::invalid_argument("empty image");
    if (img.pixels.size() !=
        static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height))
        throw std::invalid_argument("pixel buffer does not match dimensions");
}

} // namespace

EncryptionAction action_from_index(int index) {
    switch (index) {
    case 0: return EncryptionAction::Xor;
    case 1: return EncryptionAction::Qft;
    case 2: return EncryptionAction::Scramble;
    case 3: return EncryptionAction::None;
    default: throw std::out_of_range("action index must be in [0,3]");
    }
}

int action_index(EncryptionAction action) {
    return static_cast<int>(action);
}

std::string action_name(EncryptionAction action) {
    switch (action) {
    case EncryptionAction::Xor: return "xor";
    case EncryptionAction::Qft: return "qft";
    case EncryptionAction::Scramble: return "scramble";
    case EncryptionAction::None: return "none";
    }
    throw std::logic_error("bad action");
}

EncryptionAction action_from_name(const std::string &name) {
    if (name == "xor") return EncryptionAction::Xor;
    if (name == "qft") return EncryptionAction::Qft;
    if (name == "scramble") return EncryptionAction::Scramble;
    if (name == "none") return EncryptionAction::None;
    throw std::invalid_argument("unknown encryption action: " + name);
}

double shannon_entropy(const GrayImage &img) {
    check_image(img);
    std::array<long, 256> hist{};
    for (std::uint8_t p : img.pixels)
        ++hist[p];
    const double total = static_cast<double>(img.pixels.size());
    double h = 0.0;
    for (long c : hist) {
        if (c == 0)
            continue;
        const double p = c / total;
        h -= p * std::log2(p);
    }
    return h;
}

std::array<double, 2> scale_to_quantum_domain(double f) {
    if (!(f >= 0.0 && f <= 8.0))
        throw std::domain_error("entropy feature must be in [0,8]");
    const double x = (f / 8.0) * std::numbers::pi;
    return {x, x};
}

std::uint8_t quantum_xor(std::uint8_t s, std::uint8_t k) {
    check_nibble(s, "segment");
    check_nibble(k, "key");

    // data on q0..q3, key on q4..q7
    qsim::Circuit c;
    c.num_qubits = 8;
    for (int b = 0; b < 4; ++b) {
        if (s & (1 << (3 - b)))
            c.x(b);
        if (k & (1 << (3 - b)))
            c.x(4 + b);
    }
    for (int b = 0; b < 4; ++b)
        c.cnot(4 + b, b);

    const auto state = qsim::run_circuit(c);
    for (std::size_t i = 0; i < state.dim(); ++i)
        if (std::norm(state.amplitudes()[i]) > 0.5)
            return static_cast<std::uint8_t>(i >> 4); // data register, MSB side
    throw std::logic_error("XOR circuit produced no basis state");
}

qsim::Circuit qft_circuit(int num_qubits) {
    qsim::Circuit c;
    c.num_qubits = num_qubits;
    for (int i = 0; i < num_qubits; ++i) {
        c.h(i);
        for (int j = i + 1; j < num_qubits; ++j)
            c.cphase(j, i, std::numbers::pi / double(1 << (j - i)));
    }
    for (int i = 0; i < num_qubits / 2; ++i)
        c.swap(i, num_qubits - 1 - i);
    return c;
}

std::uint8_t qft_encrypt(std::uint8_t s, std::mt19937_64 &rng) {
    check_nibble(s, "segment");
    qsim::Circuit c;
    c.num_qubits = 4;
    for (int b = 0; b < 4; ++b)
        if (s & (1 << (3 - b)))
            c.x(b);
    const auto qft = qft_circuit(4);
    c.ops.insert(c.ops.end(), qft.ops.begin(), qft.ops.end());

    const auto hist = qsim::sample(qsim::run_circuit(c), 1, rng);
    return static_cast<std::uint8_t>(
        qsim::bitstring_to_index(hist.counts.begin()->first));
}

qsim::Circuit scramble_circuit() {
    qsim::Circuit c;
    c.num_qubits = 4;
    c.swap(0, 3).swap(1, 2).x(0).x(2);
    return c;
}

namespace {

std::uint8_t basis_permute(const qsim::Circuit &c, std::uint8_t s) {
    qsim::Statevector state(c.num_qubits);
    // load |s>
    qsim::Circuit loader;
    loader.num_qubits = c.num_qubits;
    for (int b = 0; b < c.num_qubits; ++b)
        if (s & (1 << (c.num_qubits - 1 - b)))
            loader.x(b);
    for (const auto &op : loader.ops)
        state.apply(op);
    for (const auto &op : c.ops)
        state.apply(op);
    for (std::size_t i = 0; i < state.dim(); ++i)
        if (std::norm(state.amplitudes()[i]) > 0.5)
            return static_cast<std::uint8_t>(i);
    throw std::logic_error("scramble circuit is not a basis permutation");
}

} // namespace

std::uint8_t scramble_encrypt(std::uint8_t s) {
    check_nibble(s, "segment");
    return basis_permute(scramble_circuit(), s);
}

std::uint8_t scramble_decrypt(std::uint8_t s) {
    check_nibble(s, "segment");
    // inverse circuit: X gates first, then the swaps
    qsim::Circuit c;
    c.num_qubits = 4;
    c.x(0).x(2).swap(1, 2).swap(0, 3);
    return basis_permute(c, s);
}

GrayImage encrypt_image(const GrayImage &img, EncryptionAction action,
                        std::uint8_t key, std::mt19937_64 &rng) {
    check_image(img);
    check_nibble(key, "key");
    if (action == EncryptionAction::None)
        return img;

    GrayImage out = img;
    for (auto &px : out.pixels) {
        std::uint8_t hi = px >> 4;
        std::uint8_t lo = px & 0x0F;
        switch (action) {
        case EncryptionAction::Xor:
            hi = quantum_xor(hi, key);
            lo = quantum_xor(lo, key);
            break;
        case EncryptionAction::Qft:
            hi = qft_encrypt(hi, rng);
            lo = qft_encrypt(lo, rng);
            break;
        case EncryptionAction::Scramble:
            hi = scramble_encrypt(hi);
            lo = scramble_encrypt(lo);
            break;
        case EncryptionAction::None:
            break;
        }
        px = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

GrayImage decrypt_image(const GrayImage &img, EncryptionAction action,
                        std::uint8_t key) {
    check_image(img);
    check_nibble(key, "key");
    if (action == EncryptionAction::Qft)
        throw std::invalid_argument(
            "qft encryption is measurement-based and cannot be decrypted");
    if (action == EncryptionAction::None)
        return img;

    GrayImage out = img;
    for (auto &px : out.pixels) {
        std::uint8_t hi = px >> 4;
        std::uint8_t lo = px & 0x0F;
        if (action == EncryptionAction::Xor) {
            hi = quantum_xor(hi, key); // XOR is its own inverse
            lo = quantum_xor(lo, key);
        } else {
            hi = scramble_decrypt(hi);
            lo = scramble_decrypt(lo);
        }
        px = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::vector<QieEpisodeRecord> train_qie(const GrayImage &img, int episodes,
                                        double lr, std::uint64_t seed) {
    check_image(img);
    if (episodes < 1)
        throw std::invalid_argument("episodes must be >= 1");

    auto action_rng = make_stream(seed, Stream::ActionSampling);
    auto key_rng = make_stream(seed, Stream::KeyGeneration);
    auto measure_rng = make_stream(seed, Stream::Measurement);

    const auto key = static_cast<std::uint8_t>(key_rng() & 0x0F);

    var::PolicyParams params;
    params.theta.fill(std::numbers::pi / 4.0);

    const double f = shannon_entropy(img);
    const var::QiePolicy spec{scale_to_quantum_domain(f)};

    std::vector<QieEpisodeRecord> trajectory;
    trajectory.reserve(episodes);

    for (int e = 1; e <= episodes; ++e) {
        const auto probs = var::policy_probs(spec, params);

        const double u = uniform01(action_rng);
        int a = 3;
        double acc = 0.0;
        for (int i = 0; i < 3; ++i) {
            acc += probs[i];
            if (u < acc) {
                a = i;
                break;
            }
        }
        const auto action = action_from_index(a);

        const auto encrypted = encrypt_image(img, action, key, measure_rng);
        const double r = shannon_entropy(encrypted);

        // J = -(2*(r/8) - 1) * pi(a): the reward-centered cost, mirroring the
        // bandit's J = -pi(a) on reward 1 and +pi(a) on reward 0 with r
        // normalized to [0,1]. Centering matters: a reward-weighted cost
        // -(r/8)*pi(a) gives zero gradient on zero-reward episodes, so
        // low-entropy actions are never pushed down and the policy can stay
        // stuck on them.
        auto grad = var::policy_grad(spec, params, a);
        for (auto &g : grad)
            g *= -(r / 4.0 - 1.0);
        params = var::adam_step(params, grad, lr);

        QieEpisodeRecord rec;
        rec.episode = e;
        rec.action = action;
        rec.reward = r;
        rec.action_probs = probs;
        rec.theta = params.theta;
        trajectory.push_back(rec);
    }
    return trajectory;
}

} // namespace qal::qie
