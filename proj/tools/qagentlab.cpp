#include "qagentlab/harness.hpp"
#include "qagentlab/pgm.hpp"
#include "qagentlab/rng.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <thread>
#include <vector>

namespace {

using qal::harness::ExperimentConfig;

std::map<std::string, double> parse_probs(const std::string &s) {
    std::map<std::string, double> probs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--probs", "expected arm=prob entries");
        probs[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
    return probs;
}

// "a..b" inclusive
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string &s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--seeds", "expected range like 0..19");
    const auto lo = std::stoull(s.substr(0, dots));
    const auto hi = std::stoull(s.substr(dots + 2));
    if (hi < lo)
        throw CLI::ValidationError("--seeds", "range end before start");
    return {lo, hi};
}

int run_sweep(ExperimentConfig base, const std::string &seeds, int jobs) {
    const auto [lo, hi] = parse_seed_range(seeds);
    std::vector<std::uint64_t> todo;
    for (auto s = lo; s <= hi; ++s)
        todo.push_back(s);

    std::atomic<std::size_t> next{0};
    std::atomic<int> worst{qal::harness::kExitOk};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size())
                return;
            ExperimentConfig cfg = base;
            cfg.seed = todo[i];
            cfg.output_dir = base.output_dir / ("seed_" + std::to_string(todo[i]));
            const int rc = qal::harness::run_experiment(cfg);
            int cur = worst.load();
            while (rc > cur && !worst.compare_exchange_weak(cur, rc))
                ;
        }
    };

    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, jobs); ++j)
        pool.emplace_back(worker);
    for (auto &t : pool)
        t.join();
    return worst.load();
}

int run_nibble_tool(const std::string &mode, const std::string &image_in,
                    const std::string &image_out, const std::string &action,
                    int key, std::uint64_t seed) {
    try {
        const auto img = qal::pgm::read(std::filesystem::path(image_in));
        const auto act = qal::qie::action_from_name(action);
        qal::qie::GrayImage result;
        if (mode == "encrypt") {
            auto rng = qal::make_stream(seed, qal::Stream::Measurement);
            result = qal::qie::encrypt_image(img, act,
                                             static_cast<std::uint8_t>(key), rng);
        } else {
            result = qal::qie::decrypt_image(img, act,
                                             static_cast<std::uint8_t>(key));
        }
        qal::pgm::write(std::filesystem::path(image_out), result);
        return qal::harness::kExitOk;
    } catch (const qal::pgm::PgmError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return qal::harness::kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return qal::harness::kExitUsage;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qagentlab: quantum agent experiments on a statevector simulator"};
    app.require_subcommand(1);
    app.set_config("--config");

    ExperimentConfig cfg;
    std::string out_dir = "out";

    // --- grover ---
    auto *grover = app.add_subcommand("grover", "Grover action-selection agent");
    std::string target = "10";
    long shots = 1024;
    std::uint64_t seed = 0;
    grover->add_option("--target", target, "target action bitstring (2 bits)");
    grover->add_option("--shots", shots, "measurement shots");
    grover->add_option("--seed", seed, "master seed");
    grover->add_option("--out", out_dir, "output directory");

    // --- bandit ---
    auto *bandit = app.add_subcommand("bandit", "variational multi-armed bandit");
    int episodes = 0;
    double lr = 0.1;
    std::string probs_str;
    bandit->add_option("--episodes", episodes, "training episodes (default 100)");
    bandit->add_option("--lr", lr, "Adam learning rate");
    bandit->add_option("--seed", seed, "master seed");
    bandit->add_option("--probs", probs_str,
                       "arm reward probabilities, e.g. 00=0.2,01=0.35,10=0.8,11=0.5");
    bandit->add_option("--out", out_dir, "output directory");

    // --- qie ---
    auto *qie = app.add_subcommand("qie", "adaptive image-encryption agent");
    std::string image_path;
    qie->add_option("--image", image_path, "input PGM image (default: constant 64x64)");
    qie->add_option("--episodes", episodes, "training episodes (default 30)");
    qie->add_option("--lr", lr, "Adam learning rate");
    qie->add_option("--seed", seed, "master seed");
    qie->add_option("--out", out_dir, "output directory");

    std::string tool_action = "xor", tool_out = "out.pgm";
    int tool_key = 0;
    auto *encrypt = qie->add_subcommand("encrypt", "one-shot image encryption");
    encrypt->add_option("--image", image_path, "input PGM image")->required();
    encrypt->add_option("--action", tool_action, "xor|qft|scramble|none");
    encrypt->add_option("--key", tool_key, "4-bit key (0..15)")
        ->check(CLI::Range(0, 15));
    encrypt->add_option("--seed", seed, "seed for qft measurements");
    encrypt->add_option("--out", tool_out, "output PGM path");

    auto *decrypt = qie->add_subcommand("decrypt", "invert xor/scramble encryption");
    decrypt->add_option("--image", image_path, "input PGM image")->required();
    decrypt->add_option("--action", tool_action, "xor|scramble");
    decrypt->add_option("--key", tool_key, "4-bit key (0..15)")
        ->check(CLI::Range(0, 15));
    decrypt->add_option("--out", tool_out, "output PGM path");

    // --- sweep ---
    auto *sweep = app.add_subcommand("sweep", "run an agent over a seed range");
    std::string sweep_agent = "bandit", seeds_str = "0..19";
    int jobs = 1;
    sweep->add_option("--agent", sweep_agent, "grover|bandit|qie")->required();
    sweep->add_option("--seeds", seeds_str, "inclusive seed range, e.g. 0..19");
    sweep->add_option("--jobs", jobs, "parallel workers");
    sweep->add_option("--episodes", episodes, "training episodes");
    sweep->add_option("--lr", lr, "Adam learning rate");
    sweep->add_option("--probs", probs_str, "bandit arm probabilities");
    sweep->add_option("--target", target, "grover target");
    sweep->add_option("--image", image_path, "qie input image");
    sweep->add_option("--out", out_dir, "output directory");

    // --- replay ---
    auto *replay = app.add_subcommand("replay", "verify a trajectory log");
    std::string log_path;
    replay->add_option("log", log_path, "trajectory CSV emitted by an agent run")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // map every CLI11 parse failure onto the documented usage exit code;
        // --help and --version still exit 0
        const int rc = app.exit(e);
        return rc == 0 ? qal::harness::kExitOk : qal::harness::kExitUsage;
    }

    cfg.seed = seed;
    cfg.output_dir = out_dir;
    cfg.target = target;
    cfg.shots = shots;
    cfg.episodes = episodes;
    cfg.lr = lr;
    if (!probs_str.empty()) {
        try {
            cfg.arm_probs = parse_probs(probs_str);
        } catch (const std::exception &e) {
            std::cerr << "error: bad --probs: " << e.what() << "\n";
            return qal::harness::kExitUsage;
        }
    }
    if (!image_path.empty())
        cfg.image_path = image_path;

    if (grover->parsed()) {
        cfg.agent = "grover";
        return qal::harness::run_experiment(cfg);
    }
    if (bandit->parsed()) {
        cfg.agent = "bandit";
        return qal::harness::run_experiment(cfg);
    }
    if (qie->parsed()) {
        if (encrypt->parsed())
            return run_nibble_tool("encrypt", image_path, tool_out, tool_action,
                                   tool_key, seed);
        if (decrypt->parsed())
            return run_nibble_tool("decrypt", image_path, tool_out, tool_action,
                                   tool_key, seed);
        cfg.agent = "qie";
        return qal::harness::run_experiment(cfg);
    }
    if (sweep->parsed()) {
        cfg.agent = sweep_agent;
        try {
            return run_sweep(cfg, seeds_str, jobs);
        } catch (const std::exception &e) {
            std::cerr << "error: " << e.what() << "\n";
            return qal::harness::kExitUsage;
        }
    }
    if (replay->parsed()) {
        try {
            const auto result = qal::harness::replay(log_path);
            if (result.identical) {
                std::cout << "replay: identical\n";
                return qal::harness::kExitOk;
            }
            std::cout << "replay: " << result.message << "\n";
            return qal::harness::kExitReplayDiverged;
        } catch (const qal::pgm::PgmError &e) {
            std::cerr << "error: " << e.what() << "\n";
            return qal::harness::kExitIo;
        } catch (const std::exception &e) {
            std::cerr << "error: " << e.what() << "\n";
            return qal::harness::kExitUsage;
        }
    }
    return qal::harness::kExitUsage;
}
