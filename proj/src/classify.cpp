#include "stancewalk/classify.hpp"

#include "stancewalk/error.hpp"
#include "stancewalk/parallel.hpp"

#include <cassert>

namespace stancewalk {

std::string_view tie_flag_name(TieFlag flag) {
    switch (flag) {
    case TieFlag::None:
        return "none";
    case TieFlag::Near:
        return "near";
    case TieFlag::Exact:
        return "exact";
    }
    return "none";
}

Argmax argmax_with_ties(std::span<const double> values, double near_tie_margin) {
    Argmax out;
    double best = 0.0;
    for (std::size_t c = 0; c < values.size(); ++c) {
        if (values[c] > best) {
            best = values[c];
            out.cls = static_cast<int>(c);
        }
    }
    if (out.cls == kUnclassified)
        return out;
    double second = 0.0;
    bool exact = false;
    for (std::size_t c = 0; c < values.size(); ++c) {
        if (static_cast<int>(c) == out.cls)
            continue;
        if (values[c] == best)
            exact = true;
        second = std::max(second, values[c]);
    }
    if (exact)
        out.tie = TieFlag::Exact;
    else if ((best - second) / best < near_tie_margin)
        out.tie = TieFlag::Near;
    return out;
}

std::vector<HashtagAssignment> classify_hashtags(const SimilarityScores& scores,
                                                 const ClassifyOptions& options) {
    std::vector<HashtagAssignment> out(scores.hashtags());
    for (std::size_t i = 0; i < scores.hashtags(); ++i) {
        const auto profile = scores.column(i);
        const auto best = argmax_with_ties(profile, options.near_tie_margin);
        auto& a = out[i];
        a.cls = best.cls;
        a.tie = best.tie;
        if (best.cls == kUnclassified)
            continue;
        const double entropy = normalized_entropy(profile);
        a.intensity = options.orientation == IntensityOrientation::Concentration ? 1.0 - entropy
                                                                                  : entropy;
    }
    return out;
}

std::vector<UserAssignment> classify_users(const SharingMatrix& matrix,
                                           std::span<const HashtagAssignment> hashtags,
                                           std::size_t classes, double near_tie_margin,
                                           int threads) {
    if (hashtags.size() != matrix.num_hashtags())
        throw DomainError("hashtag assignments do not match the sharing matrix");
    std::vector<UserAssignment> out(matrix.num_users());
    parallel_for(matrix.num_users(), threads, [&](std::size_t k) {
        const auto total = static_cast<double>(matrix.user_total(k));
        assert(total > 0.0);
        auto& user = out[k];
        user.inclination.assign(classes, 0.0);
        for (const auto& e : matrix.user_row(k)) {
            const auto& h = hashtags[e.index];
            if (h.cls == kUnclassified || !h.intensity)
                continue;
            user.inclination[static_cast<std::size_t>(h.cls)] +=
                *h.intensity * static_cast<double>(e.count) / total;
        }
        const auto best = argmax_with_ties(user.inclination, near_tie_margin);
        user.cls = best.cls;
        user.tie = best.tie;
    });
    return out;
}

} // namespace stancewalk
