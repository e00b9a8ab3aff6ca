#pragma once

#include "stancewalk/ingest.hpp"
#include "stancewalk/walk.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace stancewalk {

inline constexpr int kUnclassified = -1;

/// How close the runner-up was to the winning class.
enum class TieFlag {
    None,
    /// Runner-up within the near-tie margin of the winner.
    Near,
    /// Runner-up exactly equal; the lowest class index won.
    Exact,
};

std::string_view tie_flag_name(TieFlag flag);

/// Relative gap (best - second) / best below which an argmax is flagged as a near tie.
inline constexpr double kDefaultNearTieMargin = 0.2;

struct Argmax {
    int cls = kUnclassified;
    TieFlag tie = TieFlag::None;
};

/// Largest entry, lowest index on ties; kUnclassified when no entry is positive.
Argmax argmax_with_ties(std::span<const double> values, double near_tie_margin = kDefaultNearTieMargin);

enum class IntensityOrientation {
    /// 1 - normalized entropy of the similarity profile: 1 when all similarity sits on one seed.
    Concentration,
    /// The normalized entropy itself.
    Entropy,
};

struct ClassifyOptions {
    IntensityOrientation orientation = IntensityOrientation::Concentration;
    double near_tie_margin = kDefaultNearTieMargin;
};

struct HashtagAssignment {
    int cls = kUnclassified;
    /// Stance intensity in [0, 1]; empty when unclassified or when the method has none.
    std::optional<double> intensity;
    TieFlag tie = TieFlag::None;
};

struct UserAssignment {
    int cls = kUnclassified;
    /// Per-class inclination (or share fraction for majority-vote methods), each in [0, 1].
    std::vector<double> inclination;
    TieFlag tie = TieFlag::None;
};

/// Class and stance intensity of every hashtag from its similarity profile.
std::vector<HashtagAssignment> classify_hashtags(const SimilarityScores& scores,
                                                 const ClassifyOptions& options = {});

/**
 * Inclination L_kc = sum over class-c hashtags of intensity(h_i) * R_ki / R'_k, and the class
 * with the largest inclination. Hashtags without an intensity contribute nothing.
 */
std::vector<UserAssignment> classify_users(const SharingMatrix& matrix,
                                           std::span<const HashtagAssignment> hashtags,
                                           std::size_t classes,
                                           double near_tie_margin = kDefaultNearTieMargin,
                                           int threads = 1);

/// Hashtag and user results of one method over one sharing matrix index.
struct Classification {
    std::vector<HashtagAssignment> hashtags;
    std::vector<UserAssignment> users;
    /// False when an iterative method stopped at its iteration cap.
    bool converged = true;
};

} // namespace stancewalk
