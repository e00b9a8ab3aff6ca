#include "stancewalk/walk.hpp"

#include "stancewalk/error.hpp"
#include "stancewalk/parallel.hpp"
#include "stancewalk/table.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace stancewalk {

double normalized_entropy(std::span<const double> weights) {
    if (weights.size() < 2)
        throw DomainError("entropy normalization needs at least two classes");
    double sum = 0.0;
    std::size_t positive = 0;
    double lo = INFINITY;
    double hi = 0.0;
    for (const double w : weights) {
        if (w > 0.0) {
            sum += w;
            ++positive;
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        }
    }
    if (positive == 0)
        return 0.0;
    // Uniform mass is maximal by definition; avoid 1 - 1e-16 from rounding.
    if (positive == weights.size() && lo == hi)
        return 1.0;
    double h = 0.0;
    for (const double w : weights) {
        if (w > 0.0) {
            const double p = w / sum;
            h -= p * std::log(p);
        }
    }
    return std::clamp(h / std::log(static_cast<double>(weights.size())), 0.0, 1.0);
}

double seed_entropy(const HashtagGraph& graph, std::span<const std::size_t> seeds, std::size_t i) {
    std::vector<double> w(seeds.size());
    for (std::size_t c = 0; c < seeds.size(); ++c)
        w[c] = graph.weight(i, seeds[c]);
    return normalized_entropy(w);
}

std::vector<double> seed_entropies(const HashtagGraph& graph, std::span<const std::size_t> seeds) {
    const auto m = graph.size();
    const auto t = seeds.size();
    // Gather seed adjacency from the seed rows (A is symmetric): O(sum of seed degrees).
    std::vector<double> weights(m * t, 0.0);
    for (std::size_t c = 0; c < t; ++c)
        for (const auto& e : graph.neighbors(seeds[c]))
            weights[e.target * t + c] = e.weight;
    std::vector<double> out(m);
    for (std::size_t i = 0; i < m; ++i)
        out[i] = normalized_entropy(std::span<const double>(weights.data() + i * t, t));
    return out;
}

double TransitionMatrix::at(std::size_t i, std::size_t j) const {
    const auto r = row(i);
    const auto it = std::lower_bound(r.begin(), r.end(), j,
                                     [](const Entry& e, std::size_t t) { return e.target < t; });
    return it != r.end() && it->target == j ? it->probability : 0.0;
}

namespace {

/// Normalizes `scratch` (one row) and appends it; an all-zero row stays empty.
void append_normalized(std::vector<TransitionMatrix::Entry>& scratch,
                       std::vector<TransitionMatrix::Entry>& entries,
                       std::vector<std::size_t>& offsets) {
    double sum = 0.0;
    for (const auto& e : scratch)
        sum += e.probability;
    if (sum > 0.0)
        for (const auto& e : scratch)
            entries.push_back({e.target, e.probability / sum});
    offsets.push_back(entries.size());
    scratch.clear();
}

} // namespace

TransitionMatrix row_normalize(const HashtagGraph& graph) {
    std::vector<std::size_t> offsets{0};
    std::vector<TransitionMatrix::Entry> entries;
    entries.reserve(graph.num_edges() * 2);
    std::vector<TransitionMatrix::Entry> scratch;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        for (const auto& e : graph.neighbors(i))
            if (e.weight > 0.0)
                scratch.push_back({e.target, e.weight});
        append_normalized(scratch, entries, offsets);
    }
    return {graph.size(), std::move(offsets), std::move(entries)};
}

TransitionMatrix build_transition(const HashtagGraph& graph, std::span<const std::size_t> seeds,
                                  std::size_t active, const WalkConfig& config) {
    if (active >= seeds.size())
        throw DomainError("active seed index out of range");
    const auto m = graph.size();
    std::vector<bool> is_seed(m, false);
    for (const auto s : seeds) {
        if (s >= m)
            throw DomainError("seed index out of range");
        is_seed[s] = true;
    }
    std::vector<bool> blocked(m, false);
    if (config.block_other_seeds)
        for (std::size_t c = 0; c < seeds.size(); ++c)
            if (c != active)
                blocked[seeds[c]] = true;

    // Dampening factor (1 - E_i) / d_i for non-seed hashtags, 1 for seeds.
    std::vector<double> factor(m, 1.0);
    if (config.dampen) {
        const auto entropy = seed_entropies(graph, seeds);
        for (std::size_t i = 0; i < m; ++i)
            if (!is_seed[i] && graph.degree(i) > 0)
                factor[i] = (1.0 - entropy[i]) / static_cast<double>(graph.degree(i));
    }

    std::vector<std::size_t> offsets;
    offsets.reserve(m + 1);
    offsets.push_back(0);
    std::vector<TransitionMatrix::Entry> entries;
    entries.reserve(graph.num_edges() * 2);
    std::vector<TransitionMatrix::Entry> scratch;
    for (std::size_t i = 0; i < m; ++i) {
        if (!blocked[i]) {
            for (const auto& e : graph.neighbors(i)) {
                if (blocked[e.target])
                    continue;
                double w = e.weight;
                if (config.dampen) {
                    if (config.scope == DampeningScope::AllIncidentEdges)
                        w *= factor[i] * factor[e.target];
                    else if (is_seed[e.target])
                        w *= factor[i];
                }
                if (w > 0.0)
                    scratch.push_back({e.target, w});
            }
        }
        append_normalized(scratch, entries, offsets);
    }
    return {m, std::move(offsets), std::move(entries)};
}

namespace {

void step(const TransitionMatrix& transition, const std::vector<double>& current,
          std::vector<double>& next) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < current.size(); ++i) {
        const double mass = current[i];
        if (mass == 0.0)
            continue;
        for (const auto& e : transition.row(i))
            next[e.target] += mass * e.probability;
    }
}

} // namespace

std::vector<std::vector<double>> visit_distributions(const TransitionMatrix& transition,
                                                     std::size_t start, int rho) {
    if (start >= transition.size())
        throw DomainError("walk start out of range");
    std::vector<std::vector<double>> out;
    std::vector<double> current(transition.size(), 0.0);
    current[start] = 1.0;
    std::vector<double> next(transition.size());
    for (int z = 1; z <= rho; ++z) {
        step(transition, current, next);
        std::swap(current, next);
        out.push_back(current);
    }
    return out;
}

std::vector<double> run_walk(const TransitionMatrix& transition, std::size_t start, int rho) {
    if (rho < 1)
        throw DomainError("walk length rho must be at least 1");
    if (start >= transition.size())
        throw DomainError("walk start out of range");
    const auto m = transition.size();
    std::vector<double> similarity(m, 0.0);
    std::vector<double> current(m, 0.0);
    std::vector<double> next(m);
    current[start] = 1.0;
    for (int z = 1; z <= rho; ++z) {
        step(transition, current, next);
        std::swap(current, next);
        for (std::size_t i = 0; i < m; ++i)
            similarity[i] += current[i];
    }
    return similarity;
}

std::vector<double> SimilarityScores::column(std::size_t i) const {
    std::vector<double> out(classes_);
    for (std::size_t c = 0; c < classes_; ++c)
        out[c] = at(c, i);
    return out;
}

SimilarityScores all_similarities(const HashtagGraph& graph, std::span<const std::size_t> seeds,
                                  const WalkConfig& config) {
    if (config.rho < 1)
        throw DomainError("walk length rho must be at least 1");
    SimilarityScores scores(seeds.size(), graph.size());
    parallel_for(seeds.size(), config.threads, [&](std::size_t c) {
        const auto transition = build_transition(graph, seeds, c, config);
        const auto row = run_walk(transition, seeds[c], config.rho);
        std::copy(row.begin(), row.end(), scores.row(c).begin());
    });
    return scores;
}

SimilarityScores all_similarities(const HashtagGraph& graph, const SeedSet& seeds,
                                  const WalkConfig& config) {
    const auto idx = seeds.resolve(graph.hashtags());
    return all_similarities(graph, idx, config);
}

void write_similarity_dump(std::ostream& out, const SimilarityScores& scores,
                           const std::vector<std::string>& hashtags,
                           const std::vector<std::string>& class_names) {
    TableWriter table(out, {"class", "hashtag", "score"});
    for (std::size_t c = 0; c < scores.classes(); ++c)
        for (std::size_t i = 0; i < scores.hashtags(); ++i)
            table.row(class_names[c], hashtags[i], scores.at(c, i));
}

} // namespace stancewalk
