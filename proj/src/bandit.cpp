#include "qagentlab/bandit.hpp"
#include "qagentlab/rng.hpp"

#include <numbers>
#include <stdexcept>

namespace qal::bandit {

BanditConfig default_env() {
    BanditConfig cfg;
    cfg.probs = {{"00", 0.2}, {"01", 0.35}, {"10", 0.8}, {"11", 0.5}};
    cfg.episodes = 100;
    return cfg;
}

int pull_arm(const BanditConfig &config, const std::string &arm,
             std::mt19937_64 &rng) {
    const auto it = config.probs.find(arm);
    if (it == config.probs.end())
        throw std::invalid_argument("unknown arm: " + arm);
    return uniform01(rng) < it->second ? 1 : 0;
}

namespace {

int sample_index(const std::array<double, 4> &probs, std::mt19937_64 &rng) {
    const double u = uniform01(rng);
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        acc += probs[i];
        if (u < acc)
            return i;
    }
    return 3;
}

} // namespace

std::vector<EpisodeRecord> train(const BanditConfig &config) {
    for (const auto &arm : kArms)
        if (!config.probs.count(arm))
            throw std::invalid_argument("config missing arm " + arm);

    auto action_rng = make_stream(config.seed, Stream::ActionSampling);
    auto env_rng = make_stream(config.seed, Stream::Environment);

    var::PolicyParams params;
    params.theta.fill(std::numbers::pi / 4.0);

    std::array<double, 4> mean_reward{};
    std::array<long, 4> pulls{};
    long cumulative = 0;

    std::vector<EpisodeRecord> trajectory;
    trajectory.reserve(config.episodes);

    for (int t = 1; t <= config.episodes; ++t) {
        const auto probs = var::policy_probs(var::BanditPolicy{}, params);
        const int a = sample_index(probs, action_rng);
        const int r = pull_arm(config, kArms[a], env_rng);

        cumulative += r;
        pulls[a] += 1;
        mean_reward[a] += (r - mean_reward[a]) / static_cast<double>(pulls[a]);

        // J = -pi(a) if rewarded, +pi(a) otherwise
        auto grad = var::policy_grad(var::BanditPolicy{}, params, a);
        const double sign = (r == 1) ? -1.0 : 1.0;
        for (auto &g : grad)
            g *= sign;
        params = var::adam_step(params, grad, config.lr);

        EpisodeRecord rec;
        rec.episode = t;
        rec.action = kArms[a];
        rec.reward = r;
        rec.cumulative_reward = cumulative;
        rec.policy_probs = probs;
        rec.theta = params.theta;
        rec.mean_reward = mean_reward;
        rec.pull_count = pulls;
        trajectory.push_back(rec);
    }
    return trajectory;
}

} // namespace qal::bandit
