#pragma once

#include "stancewalk/baselines.hpp"
#include "stancewalk/classify.hpp"
#include "stancewalk/graph.hpp"
#include "stancewalk/ingest.hpp"
#include "stancewalk/walk.hpp"

#include <optional>

namespace stancewalk {

struct PipelineOptions {
    Method method = Method::Lrm;
    WalkConfig walk;
    ClassifyOptions classify;
    BaselineConfig baseline;
    /// Apply engagement filtering (seeds exempt) before building any graph.
    bool filter = true;
    int threads = 1;
};

struct PipelineResult {
    /// The corpus actually classified (filtered when requested).
    /// Filtered corpus. Posts are carried only for methods built on the co-occurrence graph.
    Corpus corpus;
    FilterStats filter_stats;
    Classification classification;
    /// Graph and seed scores, for the methods that produce them.
    std::optional<HashtagGraph> graph;
    std::optional<SimilarityScores> scores;
};

/// Filters the matrix and, when present and wanted, restricts the posts to the surviving entities.
Corpus filter_corpus(const Corpus& corpus, const SeedSet& seeds, FilterStats* stats = nullptr,
                     bool keep_posts = true);

/// Filter -> graph -> similarities -> classification for one method.
PipelineResult run_pipeline(const Corpus& corpus, const SeedSet& seeds, const PipelineOptions& options);

} // namespace stancewalk
