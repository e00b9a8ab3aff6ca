#pragma once

#include "stancewalk/eval.hpp"
#include "stancewalk/ingest.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace stancewalk {

/**
 * Planted-partition corpus parameters.
 *
 * Every user belongs to one class. Each hashtag slot of a post is drawn from the user's own
 * class pool with probability `in_class_prob`; otherwise from the general pool with probability
 * `general_share` (when it exists) or from a uniformly chosen other class's pool. Inside a class
 * pool the seed takes `seed_prob` of the draws and the rest follow a Zipf law with exponent
 * `pool_skew` (0 = uniform). Hubs are extra general hashtags attached to a post with
 * probability `hub_prob`, the same for every class.
 */
struct SynthConfig {
    std::size_t classes = 2;
    std::size_t users_per_class = 500;
    std::size_t hashtags_per_class = 50; // including the seed
    std::size_t general_hashtags = 10;
    double in_class_prob = 0.8;
    std::size_t posts_per_user = 40;
    std::size_t tags_per_post = 2;
    double seed_prob = 0.2;
    double pool_skew = 1.0;
    double general_share = 0.5;
    std::size_t hub_hashtags = 0;
    double hub_prob = 0.0;
    /// activity[w][c] scales class c's posts per user in window w; empty means one window at 1.
    std::vector<std::vector<double>> activity;
    Timestamp time_origin = 1573862400; // 2019-11-16T00:00:00Z
    std::int64_t window_seconds = 7 * 24 * 3600;
    std::uint64_t rng_seed = 20191116;
};

/// DomainError describing the first violated constraint (e.g. in_class_prob <= 1/classes).
void validate(const SynthConfig& config);

struct SynthCorpus {
    std::vector<PostRecord> posts;
    /// Planted user classes and class hashtag pools (seeds included, general and hubs not).
    GoldenSet golden;
    SeedSet seeds;
};

/// Deterministic in the config: same config, same corpus.
SynthCorpus generate(const SynthConfig& config);

/// Named configurations: `reference`, `hubs`, `evolution`, `disjoint`, `desk`.
SynthConfig synth_preset(std::string_view name);

std::vector<std::string_view> synth_preset_names();

/// Hashtag naming used by the generator.
std::string synth_seed_name(std::size_t cls);
std::string synth_class_hashtag(std::size_t cls, std::size_t j);
std::string synth_general_hashtag(std::size_t j);
std::string synth_hub_hashtag(std::size_t j);
std::string synth_user(std::size_t cls, std::size_t k);
std::string synth_class_name(std::size_t cls);

} // namespace stancewalk
