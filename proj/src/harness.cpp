#include "qagentlab/harness.hpp"
#include "qagentlab/grover.hpp"
#include "qagentlab/pgm.hpp"
#include "qagentlab/rng.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qal::harness {

namespace {

constexpr const char *kSchema = "qagentlab-csv v1";
constexpr const char *kBuiltinImage = "builtin:const64";

std::string probs_to_string(const std::map<std::string, double> &probs) {
    std::string s;
    for (const auto &[arm, p] : probs) {
        if (!s.empty())
            s += ';';
        s += arm + ":" + format_double(p);
    }
    return s;
}

std::map<std::string, double> probs_from_string(const std::string &s) {
    std::map<std::string, double> probs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("malformed probs entry: " + item);
        probs[item.substr(0, colon)] = std::stod(item.substr(colon + 1));
    }
    return probs;
}

// ---- trajectory log generation (shared by run_experiment and replay) ----

std::string grover_log(const ExperimentConfig &cfg) {
    grover::GroverTask task{cfg.target, cfg.shots};
    auto rng = make_stream(cfg.seed, Stream::Measurement);
    const auto sel = grover::select_action(task, rng);

    std::ostringstream out;
    out << "# " << kSchema << " agent=grover seed=" << cfg.seed
        << " target=" << cfg.target << " shots=" << cfg.shots << "\n";
    out << "bitstring,count\n";
    for (const auto &arm : bandit::kArms) {
        const auto it = sel.histogram.counts.find(arm);
        out << arm << "," << (it == sel.histogram.counts.end() ? 0 : it->second)
            << "\n";
    }
    return out.str();
}

std::string bandit_log(const ExperimentConfig &cfg,
                       std::vector<bandit::EpisodeRecord> *records_out) {
    bandit::BanditConfig bc = bandit::default_env();
    if (!cfg.arm_probs.empty())
        bc.probs = cfg.arm_probs;
    if (cfg.episodes > 0)
        bc.episodes = cfg.episodes;
    bc.lr = cfg.lr;
    bc.seed = cfg.seed;

    const auto records = bandit::train(bc);
    if (records_out)
        *records_out = records;

    std::ostringstream out;
    out << "# " << kSchema << " agent=bandit seed=" << cfg.seed
        << " episodes=" << bc.episodes << " lr=" << format_double(bc.lr)
        << " probs=" << probs_to_string(bc.probs) << "\n";
    out << "episode,action,reward,cumulative_reward,p00,p01,p10,p11\n";
    for (const auto &r : records) {
        out << r.episode << "," << r.action << "," << r.reward << ","
            << r.cumulative_reward;
        for (double p : r.policy_probs)
            out << "," << format_double(p);
        out << "\n";
    }
    return out.str();
}

qie::GrayImage load_qie_image(const std::string &image_ref) {
    if (image_ref == kBuiltinImage)
        return builtin_constant_image();
    return pgm::read(std::filesystem::path(image_ref));
}

std::string qie_log(const ExperimentConfig &cfg,
                    std::vector<qie::QieEpisodeRecord> *records_out) {
    const std::string image_ref =
        cfg.image_path.empty() ? kBuiltinImage : cfg.image_path.string();
    const auto img = load_qie_image(image_ref);
    const int episodes = cfg.episodes > 0 ? cfg.episodes : 30;

    const auto records = qie::train_qie(img, episodes, cfg.lr, cfg.seed);
    if (records_out)
        *records_out = records;

    std::ostringstream out;
    out << "# " << kSchema << " agent=qie seed=" << cfg.seed
        << " episodes=" << episodes << " lr=" << format_double(cfg.lr)
        << " image=" << image_ref << "\n";
    out << "episode,action,reward_entropy_bits,p_xor,p_qft,p_scramble,p_none\n";
    for (const auto &r : records) {
        out << r.episode << "," << qie::action_name(r.action) << ","
            << format_double(r.reward);
        for (double p : r.action_probs)
            out << "," << format_double(p);
        out << "\n";
    }
    return out.str();
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw pgm::PgmError("cannot open " + path.string() + " for writing");
    out << content;
    if (!out)
        throw pgm::PgmError("write failed: " + path.string());
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

qie::GrayImage builtin_constant_image() {
    qie::GrayImage img;
    img.width = 64;
    img.height = 64;
    img.pixels.assign(64 * 64, 128);
    return img;
}

int run_experiment(const ExperimentConfig &cfg) {
    using nlohmann::json;
    try {
        std::error_code ec;
        std::filesystem::create_directories(cfg.output_dir, ec);
        if (ec) {
            std::cerr << "error: cannot create " << cfg.output_dir << ": "
                      << ec.message() << "\n";
            return kExitIo;
        }

        json summary;
        summary["schema"] = kSchema;
        summary["agent"] = cfg.agent;
        summary["seed"] = cfg.seed;

        if (cfg.agent == "grover") {
            const std::string log = grover_log(cfg);
            write_file(cfg.output_dir / "grover_histogram.csv", log);

            grover::GroverTask task{cfg.target, cfg.shots};
            auto rng = make_stream(cfg.seed, Stream::Measurement);
            const auto sel = grover::select_action(task, rng);
            summary["target"] = cfg.target;
            summary["chosen"] = sel.chosen;
            summary["shots"] = cfg.shots;
        } else if (cfg.agent == "bandit") {
            std::vector<bandit::EpisodeRecord> records;
            const std::string log = bandit_log(cfg, &records);
            write_file(cfg.output_dir / "bandit_episodes.csv", log);

            std::map<std::string, long> freq;
            for (const auto &arm : bandit::kArms)
                freq[arm] = 0;
            for (const auto &r : records)
                ++freq[r.action];
            std::ostringstream fs;
            fs << "# " << kSchema << " agent=bandit seed=" << cfg.seed << "\n";
            fs << "arm,count\n";
            for (const auto &[arm, count] : freq)
                fs << arm << "," << count << "\n";
            write_file(cfg.output_dir / "bandit_arm_frequency.csv", fs.str());

            const auto &last = records.back();
            summary["episodes"] = static_cast<int>(records.size());
            summary["cumulative_reward"] = last.cumulative_reward;
            summary["arm_frequency"] = freq;
        } else if (cfg.agent == "qie") {
            std::vector<qie::QieEpisodeRecord> records;
            const std::string log = qie_log(cfg, &records);
            write_file(cfg.output_dir / "qie_episodes.csv", log);

            std::map<std::string, long> freq = {
                {"xor", 0}, {"qft", 0}, {"scramble", 0}, {"none", 0}};
            for (const auto &r : records)
                ++freq[qie::action_name(r.action)];
            std::ostringstream fs;
            fs << "# " << kSchema << " agent=qie seed=" << cfg.seed << "\n";
            fs << "action,count\n";
            for (const auto &[name, count] : freq)
                fs << name << "," << count << "\n";
            write_file(cfg.output_dir / "qie_action_frequency.csv", fs.str());

            summary["episodes"] = static_cast<int>(records.size());
            summary["final_entropy_bits"] = records.back().reward;
            summary["action_frequency"] = freq;
        } else {
            std::cerr << "error: unknown agent '" << cfg.agent << "'\n";
            return kExitUsage;
        }

        write_file(cfg.output_dir / "summary.json", summary.dump(2) + "\n");
        return kExitOk;
    } catch (const pgm::PgmError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

ReplayResult replay(const std::filesystem::path &log_path) {
    std::ifstream in(log_path, std::ios::binary);
    if (!in)
        throw pgm::PgmError("cannot open " + log_path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string recorded = buf.str();

    std::string header;
    {
        std::istringstream is(recorded);
        if (!std::getline(is, header) || header.rfind("# ", 0) != 0 ||
            header.find(kSchema) == std::string::npos)
            throw std::invalid_argument(
                "parse error at line 1: missing qagentlab-csv header in " +
                log_path.string());
    }

    // key=value metadata after the schema tag
    std::map<std::string, std::string> meta;
    {
        std::istringstream is(header.substr(2 + std::string(kSchema).size()));
        std::string tok;
        while (is >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument(
                    "parse error at line 1: malformed metadata token '" + tok +
                    "'");
            meta[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
    }

    ExperimentConfig cfg;
    try {
        cfg.agent = meta.at("agent");
        cfg.seed = std::stoull(meta.at("seed"));
        if (cfg.agent == "grover") {
            cfg.target = meta.at("target");
            cfg.shots = std::stol(meta.at("shots"));
        } else if (cfg.agent == "bandit") {
            cfg.episodes = std::stoi(meta.at("episodes"));
            cfg.lr = std::stod(meta.at("lr"));
            cfg.arm_probs = probs_from_string(meta.at("probs"));
        } else if (cfg.agent == "qie") {
            cfg.episodes = std::stoi(meta.at("episodes"));
            cfg.lr = std::stod(meta.at("lr"));
            if (meta.at("image") != kBuiltinImage)
                cfg.image_path = meta.at("image");
        } else {
            throw std::invalid_argument("unknown agent '" + cfg.agent + "'");
        }
    } catch (const std::out_of_range &) {
        throw std::invalid_argument(
            "parse error at line 1: incomplete metadata for replay");
    }

    std::string regenerated;
    if (cfg.agent == "grover")
        regenerated = grover_log(cfg);
    else if (cfg.agent == "bandit")
        regenerated = bandit_log(cfg, nullptr);
    else
        regenerated = qie_log(cfg, nullptr);

    if (regenerated == recorded)
        return {true, "identical"};

    // locate the first divergent line for the report
    std::istringstream a(recorded), b(regenerated);
    std::string la, lb;
    int line = 0;
    while (true) {
        ++line;
        const bool ga = static_cast<bool>(std::getline(a, la));
        const bool gb = static_cast<bool>(std::getline(b, lb));
        if (!ga && !gb)
            break;
        if (la != lb || ga != gb) {
            std::ostringstream msg;
            msg << "divergence at line " << line;
            if (line > 2)
                msg << " (episode " << (line - 2) << ")";
            msg << ": recorded '" << (ga ? la : std::string("<eof>"))
                << "' vs replayed '" << (gb ? lb : std::string("<eof>")) << "'";
            return {false, msg.str()};
        }
    }
    return {false, "divergence: logs differ"};
}

} // namespace qal::harness
