#include "stancewalk/synth.hpp"

#include "stancewalk/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace stancewalk {

namespace {

std::string numbered(const char* prefix, std::size_t cls, const char* infix, std::size_t j) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%zu%s%04zu", prefix, cls, infix, j);
    return buf;
}

/// Portable generator helpers: the standard distributions are implementation-defined.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : rng_(seed) {}

    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    std::size_t below(std::size_t bound) {
        const std::uint64_t b = bound;
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % b);
        std::uint64_t x;
        do {
            x = rng_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % b);
    }

    /// Index drawn from cumulative weights.
    std::size_t pick(const std::vector<double>& cumulative) {
        const double u = uniform() * cumulative.back();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        return std::min(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace

std::string synth_seed_name(std::size_t cls) { return "stance" + std::to_string(cls + 1); }
std::string synth_class_hashtag(std::size_t cls, std::size_t j) { return numbered("c", cls + 1, "_t", j); }
std::string synth_general_hashtag(std::size_t j) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "general_%03zu", j);
    return buf;
}
std::string synth_hub_hashtag(std::size_t j) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "hub_%02zu", j);
    return buf;
}
std::string synth_user(std::size_t cls, std::size_t k) { return numbered("c", cls + 1, "_u", k); }
std::string synth_class_name(std::size_t cls) { return "class" + std::to_string(cls + 1); }

void validate(const SynthConfig& config) {
    const auto fail = [](const std::string& what) { throw DomainError("synth config: " + what); };
    if (config.classes < 2)
        fail("at least two classes are required");
    if (config.users_per_class < 1 || config.hashtags_per_class < 1 || config.posts_per_user < 1 ||
        config.tags_per_post < 1)
        fail("all counts must be at least 1");
    if (!(config.in_class_prob > 1.0 / static_cast<double>(config.classes)) ||
        config.in_class_prob > 1.0)
        fail("in_class_prob must lie in (1/classes, 1]");
    if (config.seed_prob < 0.0 || config.seed_prob > 1.0)
        fail("seed_prob must lie in [0, 1]");
    if (config.hashtags_per_class == 1 && config.seed_prob < 1.0)
        fail("a pool of one hashtag needs seed_prob = 1");
    if (config.general_share < 0.0 || config.general_share > 1.0)
        fail("general_share must lie in [0, 1]");
    if (config.hub_prob < 0.0 || config.hub_prob > 1.0)
        fail("hub_prob must lie in [0, 1]");
    if (config.hub_prob > 0.0 && config.hub_hashtags == 0)
        fail("hub_prob > 0 needs hub hashtags");
    if (config.pool_skew < 0.0)
        fail("pool_skew must be non-negative");
    if (config.window_seconds <= 0)
        fail("window_seconds must be positive");
    for (const auto& w : config.activity) {
        if (w.size() != config.classes)
            fail("each activity row needs one multiplier per class");
        for (const double a : w)
            if (a < 0.0)
                fail("activity multipliers must be non-negative");
    }
}

SynthCorpus generate(const SynthConfig& config) {
    validate(config);
    const auto t = config.classes;
    std::vector<std::string> seed_names;
    std::vector<std::string> class_names;
    for (std::size_t c = 0; c < t; ++c) {
        seed_names.push_back(synth_seed_name(c));
        class_names.push_back(synth_class_name(c));
    }
    SynthCorpus out{{}, {}, SeedSet(seed_names, class_names)};
    out.golden.users.resize(t);
    out.golden.hashtags.resize(t);

    // pools[c][0] is the seed.
    std::vector<std::vector<std::string>> pools(t);
    for (std::size_t c = 0; c < t; ++c) {
        pools[c].push_back(seed_names[c]);
        for (std::size_t j = 1; j < config.hashtags_per_class; ++j)
            pools[c].push_back(synth_class_hashtag(c, j));
        out.golden.hashtags[c].insert(pools[c].begin(), pools[c].end());
    }
    std::vector<std::string> general;
    for (std::size_t j = 0; j < config.general_hashtags; ++j)
        general.push_back(synth_general_hashtag(j));
    std::vector<std::string> hubs;
    for (std::size_t j = 0; j < config.hub_hashtags; ++j)
        hubs.push_back(synth_hub_hashtag(j));

    // Zipf weights over the non-seed part of a pool.
    std::vector<double> pool_cdf;
    for (std::size_t j = 1; j < config.hashtags_per_class; ++j) {
        const double w = 1.0 / std::pow(static_cast<double>(j), config.pool_skew);
        pool_cdf.push_back((pool_cdf.empty() ? 0.0 : pool_cdf.back()) + w);
    }

    Stream rng(config.rng_seed);
    const auto draw_from_pool = [&](std::size_t c) -> const std::string& {
        if (pool_cdf.empty() || rng.uniform() < config.seed_prob)
            return pools[c][0];
        return pools[c][1 + rng.pick(pool_cdf)];
    };
    const auto draw_tag = [&](std::size_t c) -> const std::string& {
        if (rng.uniform() < config.in_class_prob)
            return draw_from_pool(c);
        if (!general.empty() && rng.uniform() < config.general_share)
            return general[rng.below(general.size())];
        auto other = rng.below(t - 1);
        if (other >= c)
            ++other;
        return draw_from_pool(other);
    };

    const auto activity =
        config.activity.empty() ? std::vector<std::vector<double>>{std::vector<double>(t, 1.0)}
                                : config.activity;
    for (std::size_t c = 0; c < t; ++c)
        for (std::size_t k = 0; k < config.users_per_class; ++k)
            out.golden.users[c].insert(synth_user(c, k));

    for (std::size_t w = 0; w < activity.size(); ++w) {
        const Timestamp window_start = config.time_origin + static_cast<Timestamp>(w) * config.window_seconds;
        for (std::size_t c = 0; c < t; ++c) {
            const auto posts = static_cast<std::size_t>(
                std::llround(static_cast<double>(config.posts_per_user) * activity[w][c]));
            for (std::size_t k = 0; k < config.users_per_class; ++k) {
                const auto user = synth_user(c, k);
                for (std::size_t p = 0; p < posts; ++p) {
                    PostRecord post;
                    post.user = user;
                    for (std::size_t s = 0; s < config.tags_per_post; ++s)
                        post.hashtags.push_back(draw_tag(c));
                    if (!hubs.empty() && rng.uniform() < config.hub_prob)
                        post.hashtags.push_back(hubs[rng.below(hubs.size())]);
                    post.timestamp = window_start + static_cast<Timestamp>(rng.below(
                                                        static_cast<std::size_t>(config.window_seconds)));
                    out.posts.push_back(std::move(post));
                }
            }
        }
    }
    return out;
}

SynthConfig synth_preset(std::string_view name) {
    SynthConfig config;
    if (name == "reference")
        return config;
    if (name == "hubs") {
        config.hub_hashtags = 5;
        config.hub_prob = 0.3;
        return config;
    }
    if (name == "evolution") {
        config.activity = {{1.0, 1.0}, {1.0, 2.0}};
        return config;
    }
    if (name == "disjoint") {
        config.in_class_prob = 1.0;
        config.general_hashtags = 0;
        return config;
    }
    if (name == "desk") {
        config.users_per_class = 5000;
        config.hashtags_per_class = 995;
        config.general_hashtags = 10;
        return config;
    }
    throw DomainError("unknown synth preset '" + std::string(name) + "'");
}

std::vector<std::string_view> synth_preset_names() {
    return {"reference", "hubs", "evolution", "disjoint", "desk"};
}

} // namespace stancewalk
