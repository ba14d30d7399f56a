#pragma once

#include "qagentlab/qsim.hpp"
#include "qagentlab/variational.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qal::qie {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // row-major

    bool operator==(const GrayImage &) const = default;
};

enum class EncryptionAction { Xor, Qft, Scramble, None };

// Policy outcome index <-> action: 00 Xor, 01 Qft, 10 Scramble, 11 None.
EncryptionAction action_from_index(int index);
int action_index(EncryptionAction action);
std::string action_name(EncryptionAction action);
EncryptionAction action_from_name(const std::string &name);

struct QieEpisodeRecord {
    int episode = 0; // 1-based
    EncryptionAction action = EncryptionAction::None;
    double reward = 0.0; // ciphertext entropy, bits
    std::array<double, 4> action_probs{};
    std::array<double, 4> theta{}; // after the update
};

// Entropy of the 256-bin intensity histogram, in [0,8] bits.
double shannon_entropy(const GrayImage &img);

// Linear map of an entropy feature into both input rotation angles: f/8 * pi.
std::array<double, 2> scale_to_quantum_domain(double f);

// 8-qubit circuit (4 data + 4 key), CNOT key->data per bit; equals s ^ k.
std::uint8_t quantum_xor(std::uint8_t s, std::uint8_t k);

// Standard 4-qubit QFT; the exposed circuit is also the acceptance oracle
// subject (must match the DFT matrix).
qsim::Circuit qft_circuit(int num_qubits);

// Prepare |s>, QFT, one seeded measurement. Not decryptable: measurement is
// the only classical readout of the transformed state.
std::uint8_t qft_encrypt(std::uint8_t s, std::mt19937_64 &rng);

// Fixed SWAP(0,3) SWAP(1,2) X(0) X(2) permutation on [0,15].
qsim::Circuit scramble_circuit();
std::uint8_t scramble_encrypt(std::uint8_t s);
std::uint8_t scramble_decrypt(std::uint8_t s);

// Per pixel: high nibble then low nibble, the chosen primitive applied to
// every nibble with the shared key.
GrayImage encrypt_image(const GrayImage &img, EncryptionAction action,
                        std::uint8_t key, std::mt19937_64 &rng);

// Xor and Scramble only; Qft throws.
GrayImage decrypt_image(const GrayImage &img, EncryptionAction action,
                        std::uint8_t key);

// Entropy-reward training loop: cost J = -(r/4 - 1) * pi(a), Adam updates,
// theta starts at [pi/4 x4], key drawn once before the episode loop.
std::vector<QieEpisodeRecord> train_qie(const GrayImage &img, int episodes,
                                        double lr, std::uint64_t seed);

} // namespace qal::qie
