#include "qagentlab/bandit.hpp"
#include "qagentlab/grover.hpp"
#include "qagentlab/harness.hpp"
#include "qagentlab/pgm.hpp"
#include "qagentlab/qie.hpp"
#include "qagentlab/qsim.hpp"
#include "qagentlab/rng.hpp"
#include "qagentlab/variational.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace qal;

namespace {

qie::GrayImage image_from_rows(int width, int height,
                               const std::vector<std::uint8_t> &pixels) {
    qie::GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels = pixels;
    if (img.pixels.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("pixel count does not match dimensions");
    return img;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "quantum agent toolkit: statevector simulator plus three agents";

    // --- simulator ---
    py::class_<qsim::Circuit>(m, "Circuit")
        .def(py::init([](int n) {
                 qsim::Circuit c;
                 c.num_qubits = n;
                 return c;
             }),
             py::arg("num_qubits"))
        .def_readonly("num_qubits", &qsim::Circuit::num_qubits)
        .def("h", &qsim::Circuit::h, py::arg("q"))
        .def("x", &qsim::Circuit::x, py::arg("q"))
        .def("ry", &qsim::Circuit::ry, py::arg("q"), py::arg("angle"))
        .def("rz", &qsim::Circuit::rz, py::arg("q"), py::arg("angle"))
        .def("cnot", &qsim::Circuit::cnot, py::arg("control"), py::arg("target"))
        .def("cz", &qsim::Circuit::cz, py::arg("control"), py::arg("target"))
        .def("swap", &qsim::Circuit::swap, py::arg("a"), py::arg("b"))
        .def("cphase", &qsim::Circuit::cphase, py::arg("control"),
             py::arg("target"), py::arg("phi"));

    m.def(
        "simulate",
        [](const qsim::Circuit &c) {
            return qsim::run_circuit(c).amplitudes();
        },
        py::arg("circuit"), "Final statevector amplitudes, qubit 0 = MSB.");
    m.def(
        "probabilities",
        [](const qsim::Circuit &c) {
            return qsim::probabilities(qsim::run_circuit(c));
        },
        py::arg("circuit"));
    m.def(
        "sample",
        [](const qsim::Circuit &c, long shots, std::uint64_t seed) {
            auto rng = make_stream(seed, Stream::Measurement);
            return qsim::sample(qsim::run_circuit(c), shots, rng).counts;
        },
        py::arg("circuit"), py::arg("shots"), py::arg("seed") = 0);
    m.def("circuit_unitary", &qsim::circuit_unitary, py::arg("circuit"));

    // --- grover agent ---
    m.def(
        "grover_select",
        [](const std::string &target, long shots, std::uint64_t seed) {
            auto rng = make_stream(seed, Stream::Measurement);
            const auto sel = grover::select_action({target, shots}, rng);
            return py::make_tuple(sel.chosen, sel.histogram.counts,
                                  sel.probabilities);
        },
        py::arg("target"), py::arg("shots") = 1024, py::arg("seed") = 0,
        "Returns (chosen, histogram, pre-measurement probabilities).");

    // --- bandit agent ---
    py::class_<bandit::EpisodeRecord>(m, "EpisodeRecord")
        .def_readonly("episode", &bandit::EpisodeRecord::episode)
        .def_readonly("action", &bandit::EpisodeRecord::action)
        .def_readonly("reward", &bandit::EpisodeRecord::reward)
        .def_readonly("cumulative_reward",
                      &bandit::EpisodeRecord::cumulative_reward)
        .def_readonly("policy_probs", &bandit::EpisodeRecord::policy_probs)
        .def_readonly("theta", &bandit::EpisodeRecord::theta);

    m.def(
        "bandit_train",
        [](const std::map<std::string, double> &probs, int episodes, double lr,
           std::uint64_t seed) {
            bandit::BanditConfig cfg = bandit::default_env();
            if (!probs.empty())
                cfg.probs = probs;
            if (episodes > 0)
                cfg.episodes = episodes;
            cfg.lr = lr;
            cfg.seed = seed;
            return bandit::train(cfg);
        },
        py::arg("probs") = std::map<std::string, double>{},
        py::arg("episodes") = 0, py::arg("lr") = 0.1, py::arg("seed") = 0);

    // --- qie agent ---
    py::class_<qie::GrayImage>(m, "GrayImage")
        .def(py::init(&image_from_rows), py::arg("width"), py::arg("height"),
             py::arg("pixels"))
        .def_readonly("width", &qie::GrayImage::width)
        .def_readonly("height", &qie::GrayImage::height)
        .def_readonly("pixels", &qie::GrayImage::pixels);

    py::class_<qie::QieEpisodeRecord>(m, "QieEpisodeRecord")
        .def_readonly("episode", &qie::QieEpisodeRecord::episode)
        .def_property_readonly("action",
                               [](const qie::QieEpisodeRecord &r) {
                                   return qie::action_name(r.action);
                               })
        .def_readonly("reward", &qie::QieEpisodeRecord::reward)
        .def_readonly("action_probs", &qie::QieEpisodeRecord::action_probs)
        .def_readonly("theta", &qie::QieEpisodeRecord::theta);

    m.def("shannon_entropy", &qie::shannon_entropy, py::arg("image"));
    m.def("quantum_xor", &qie::quantum_xor, py::arg("s"), py::arg("k"));
    m.def(
        "qft_encrypt",
        [](std::uint8_t s, std::uint64_t seed) {
            auto rng = make_stream(seed, Stream::Measurement);
            return qie::qft_encrypt(s, rng);
        },
        py::arg("s"), py::arg("seed") = 0);
    m.def("scramble_encrypt", &qie::scramble_encrypt, py::arg("s"));
    m.def("scramble_decrypt", &qie::scramble_decrypt, py::arg("s"));
    m.def(
        "encrypt_image",
        [](const qie::GrayImage &img, const std::string &action,
           std::uint8_t key, std::uint64_t seed) {
            auto rng = make_stream(seed, Stream::Measurement);
            return qie::encrypt_image(img, qie::action_from_name(action), key,
                                      rng);
        },
        py::arg("image"), py::arg("action"), py::arg("key") = 0,
        py::arg("seed") = 0);
    m.def(
        "decrypt_image",
        [](const qie::GrayImage &img, const std::string &action,
           std::uint8_t key) {
            return qie::decrypt_image(img, qie::action_from_name(action), key);
        },
        py::arg("image"), py::arg("action"), py::arg("key") = 0);
    m.def("qie_train", &qie::train_qie, py::arg("image"),
          py::arg("episodes") = 30, py::arg("lr") = 0.1, py::arg("seed") = 0);

    // --- pgm io ---
    m.def("read_pgm",
          [](const std::filesystem::path &p) { return pgm::read(p); },
          py::arg("path"));
    m.def("write_pgm",
          [](const std::filesystem::path &p, const qie::GrayImage &img) {
              pgm::write(p, img);
          },
          py::arg("path"), py::arg("image"));
}
