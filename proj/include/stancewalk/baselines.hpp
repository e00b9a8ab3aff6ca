#pragma once

#include "stancewalk/classify.hpp"
#include "stancewalk/graph.hpp"
#include "stancewalk/ingest.hpp"
#include "stancewalk/walk.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stancewalk {

/// Classification methods: the entropy-dampened walk and the comparison baselines.
enum class Method {
    Lrm, ///< seeded walk on the sharing graph with seed blocking and entropy dampening
    Rdm, ///< uniform random labels
    Srm, ///< plain walk on the co-occurrence graph
    Hsm, ///< cosine similarity of user-count columns
    Lpm, ///< clamped label propagation on the co-occurrence graph
};

std::string_view method_name(Method method);
/// Case-insensitive; DomainError for unknown names.
Method parse_method(std::string_view name);
/// Comma-separated list of method names.
std::vector<Method> parse_method_list(std::string_view names);

struct BaselineConfig {
    std::uint64_t rng_seed = 20191212;
    int max_iterations = 1000;
    double tolerance = 1e-8;
    int rho = 10;
};

/// Uniform labels in [0, classes) for every hashtag, then every user, from one seeded stream.
Classification rdm_classify(const SharingMatrix& matrix, std::size_t classes, std::uint64_t rng_seed);

/**
 * Users to the class holding most of their shares (R_ki summed over classified hashtags);
 * inclination holds the per-class share fractions.
 */
std::vector<UserAssignment> classify_users_by_majority(const SharingMatrix& matrix,
                                                       std::span<const HashtagAssignment> hashtags,
                                                       std::size_t classes);

/// Hashtags to their highest-scoring seed; no intensity is attached.
std::vector<HashtagAssignment> classify_by_argmax(const SimilarityScores& scores);

/// Plain rho-step walks from each seed over the row-normalized graph.
SimilarityScores srm_similarities(const HashtagGraph& graph, std::span<const std::size_t> seeds,
                                  int rho, int threads = 1);

/// UnsupportedInputError without post-level records.
Classification srm_classify(const Corpus& corpus, const SeedSet& seeds, const BaselineConfig& config,
                            int threads = 1);

/// Cosine of the user-count columns of hashtags i and j; 0 if either column is empty.
double column_cosine(const SharingMatrix& matrix, std::size_t i, std::size_t j);

SimilarityScores hsm_similarities(const SharingMatrix& matrix, std::span<const std::size_t> seeds);

Classification hsm_classify(const SharingMatrix& matrix, const SeedSet& seeds);

struct LabelPropagation {
    /// m x t label mass, row-major.
    std::vector<double> labels;
    std::size_t classes = 0;
    int iterations = 0;
    bool converged = false;

    double at(std::size_t i, std::size_t c) const { return labels[i * classes + c]; }
};

/**
 * L <- T^T L over the row-normalized graph, seed rows clamped to their one-hot label after
 * every step, until the largest entry change drops below `tolerance` or `max_iterations`.
 */
LabelPropagation propagate_labels(const HashtagGraph& graph, std::span<const std::size_t> seeds,
                                  int max_iterations, double tolerance);

/// UnsupportedInputError without post-level records; converged=false on hitting the cap.
Classification lpm_classify(const Corpus& corpus, const SeedSet& seeds, const BaselineConfig& config);

} // namespace stancewalk
