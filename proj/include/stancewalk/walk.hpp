#pragma once

#include "stancewalk/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace stancewalk {

/// Which edges the entropy dampening rescales.
enum class DampeningScope {
    /// Every edge incident to a non-seed hashtag i is scaled by (1 - E_i) / d_i, so an edge
    /// between two non-seed hashtags receives both endpoint factors.
    AllIncidentEdges,
    /// Only the entries A_ic from a non-seed hashtag i to a seed column c are scaled.
    SeedEdgesOnly,
};

struct WalkConfig {
    int rho = 10;
    bool block_other_seeds = true;
    bool dampen = true;
    DampeningScope scope = DampeningScope::AllIncidentEdges;
    /// Upper bound on concurrently running per-seed walks.
    int threads = 1;
};

/**
 * Normalized Shannon entropy of a non-negative weight vector: -sum p ln p / ln(size), with
 * p = w / sum(w) and 0 ln 0 = 0. Returns 0 for an all-zero vector. Needs size >= 2.
 */
double normalized_entropy(std::span<const double> weights);

/// E_i: normalized entropy of hashtag i's edge weights to the seeds (0 when i touches no seed).
double seed_entropy(const HashtagGraph& graph, std::span<const std::size_t> seeds, std::size_t i);

/// E_i for every node; seed entries are reported but never used.
std::vector<double> seed_entropies(const HashtagGraph& graph, std::span<const std::size_t> seeds);

/// Row-stochastic (or all-zero) sparse matrix in CSR form.
class TransitionMatrix {
public:
    struct Entry {
        std::uint32_t target;
        double probability;
    };

    TransitionMatrix() = default;
    TransitionMatrix(std::size_t size, std::vector<std::size_t> offsets, std::vector<Entry> entries)
        : size_(size), offsets_(std::move(offsets)), entries_(std::move(entries)) {}

    std::size_t size() const { return size_; }
    std::span<const Entry> row(std::size_t i) const {
        return {entries_.data() + offsets_[i], entries_.data() + offsets_[i + 1]};
    }
    /// T_ij, zero when absent.
    double at(std::size_t i, std::size_t j) const;

private:
    std::size_t size_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Entry> entries_;
};

/// Plain row normalization of the graph weights.
TransitionMatrix row_normalize(const HashtagGraph& graph);

/**
 * Transition matrix for the walk started at seed `active` (an index into `seeds`):
 * rows and columns of the other seeds are zeroed, edges of non-seed hashtags are dampened by
 * (1 - E_i) / d_i with E and d taken from the unmodified graph, then rows are normalized.
 * Rows whose weights all vanish stay zero.
 */
TransitionMatrix build_transition(const HashtagGraph& graph, std::span<const std::size_t> seeds,
                                  std::size_t active, const WalkConfig& config = {});

/// pi(z) = T^T pi(z-1) for z = 1..rho, with pi(0) one-hot at `start`. Returns pi(1..rho).
std::vector<std::vector<double>> visit_distributions(const TransitionMatrix& transition,
                                                     std::size_t start, int rho);

/// S_i = sum_{z=1..rho} pi_i(z).
std::vector<double> run_walk(const TransitionMatrix& transition, std::size_t start, int rho);

/// t x m similarity matrix; row c belongs to seed c.
class SimilarityScores {
public:
    SimilarityScores() = default;
    SimilarityScores(std::size_t classes, std::size_t hashtags)
        : classes_(classes), hashtags_(hashtags), values_(classes * hashtags, 0.0) {}

    std::size_t classes() const { return classes_; }
    std::size_t hashtags() const { return hashtags_; }
    double at(std::size_t c, std::size_t i) const { return values_[c * hashtags_ + i]; }
    double& at(std::size_t c, std::size_t i) { return values_[c * hashtags_ + i]; }
    std::span<const double> row(std::size_t c) const {
        return {values_.data() + c * hashtags_, hashtags_};
    }
    std::span<double> row(std::size_t c) { return {values_.data() + c * hashtags_, hashtags_}; }
    /// Similarities of hashtag i to every seed.
    std::vector<double> column(std::size_t i) const;

    friend bool operator==(const SimilarityScores&, const SimilarityScores&) = default;

private:
    std::size_t classes_ = 0;
    std::size_t hashtags_ = 0;
    std::vector<double> values_;
};

/// One independent walk per seed, each over its own transition matrix.
SimilarityScores all_similarities(const HashtagGraph& graph, std::span<const std::size_t> seeds,
                                  const WalkConfig& config = {});

/// Resolves seed names against the graph's hashtags; DomainError names a missing seed.
SimilarityScores all_similarities(const HashtagGraph& graph, const SeedSet& seeds,
                                  const WalkConfig& config = {});

/// Writes `class,hashtag,score` rows after a header.
void write_similarity_dump(std::ostream& out, const SimilarityScores& scores,
                           const std::vector<std::string>& hashtags,
                           const std::vector<std::string>& class_names);

} // namespace stancewalk
