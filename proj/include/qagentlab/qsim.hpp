#pragma once

#include <complex>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qal::qsim {

using cx = std::complex<double>;

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bit ordering convention: qubit 0 is the MOST significant bit of the
// bitstring. Basis index i corresponds to the binary expansion of i,
// MSB first. |10> on 2 qubits means q0=1, q1=0, i.e. index 2.

struct GateH { int q; };
struct GateX { int q; };
struct GateRY { int q; double angle; };
struct GateRZ { int q; double angle; };
struct GateCNOT { int control; int target; };
struct GateCZ { int control; int target; };
struct GateSWAP { int a; int b; };
struct GateCPhase { int control; int target; double phi; };

using GateOp = std::variant<GateH, GateX, GateRY, GateRZ, GateCNOT, GateCZ,
                            GateSWAP, GateCPhase>;

struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    Circuit &h(int q) { ops.push_back(GateH{q}); return *this; }
    Circuit &x(int q) { ops.push_back(GateX{q}); return *this; }
    Circuit &ry(int q, double a) { ops.push_back(GateRY{q, a}); return *this; }
    Circuit &rz(int q, double a) { ops.push_back(GateRZ{q, a}); return *this; }
    Circuit &cnot(int c, int t) { ops.push_back(GateCNOT{c, t}); return *this; }
    Circuit &cz(int c, int t) { ops.push_back(GateCZ{c, t}); return *this; }
    Circuit &swap(int a, int b) { ops.push_back(GateSWAP{a, b}); return *this; }
    Circuit &cphase(int c, int t, double phi) {
        ops.push_back(GateCPhase{c, t, phi});
        return *this;
    }
};

class Statevector {
  public:
    explicit Statevector(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cx> &amplitudes() const { return amps_; }
    std::vector<cx> &amplitudes() { return amps_; }

    // In-place stride iteration over the amplitude array; no full-matrix
    // multiply in the hot path.
    void apply(const GateOp &op);

    double norm_sq() const;

  private:
    int num_qubits_;
    std::vector<cx> amps_;
};

struct ShotHistogram {
    std::map<std::string, long> counts;
    long total_shots = 0;
};

Statevector apply_gate(Statevector state, const GateOp &op);
Statevector run_circuit(const Circuit &circuit);

// Element i is |amplitudes[i]|^2.
std::vector<double> probabilities(const Statevector &state);

// shots i.i.d. draws from probabilities(state); deterministic for a fixed rng
// state. shots == 0 is an error.
ShotHistogram sample(const Statevector &state, long shots, std::mt19937_64 &rng);

std::string index_to_bitstring(std::size_t index, int num_qubits);
std::size_t bitstring_to_index(const std::string &bits);

// Full 2^n x 2^n unitary, built by dense matrix products of embedded gate
// matrices. Separate code path from Statevector::apply; serves as the
// independent oracle for circuit equivalence checks. Limited to 6 qubits.
using Unitary = std::vector<std::vector<cx>>;
Unitary circuit_unitary(const Circuit &circuit);

} // namespace qal::qsim
