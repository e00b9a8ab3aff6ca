#include "stancewalk/pipeline.hpp"

namespace stancewalk {

Corpus filter_corpus(const Corpus& corpus, const SeedSet& seeds, FilterStats* stats, bool keep_posts) {
    Corpus out;
    out.matrix = filter_low_engagement(corpus.matrix, seeds.seeds(), stats);
    if (keep_posts && corpus.posts)
        out.posts = restrict_records(*corpus.posts, out.matrix);
    return out;
}

PipelineResult run_pipeline(const Corpus& corpus, const SeedSet& seeds, const PipelineOptions& options) {
    PipelineResult result;
    // Only the co-occurrence baselines read posts; copying them is the dominant cost otherwise.
    const bool needs_posts = options.method == Method::Srm || options.method == Method::Lpm;
    if (options.filter) {
        result.corpus = filter_corpus(corpus, seeds, &result.filter_stats, needs_posts);
    } else {
        result.corpus.matrix = corpus.matrix;
        if (needs_posts)
            result.corpus.posts = corpus.posts;
        const auto& m = corpus.matrix;
        result.filter_stats = {m.num_hashtags(), m.num_hashtags(), m.num_users(), m.num_users()};
    }
    const auto& matrix = result.corpus.matrix;
    const auto t = seeds.size();

    switch (options.method) {
    case Method::Lrm: {
        const auto idx = seeds.resolve(matrix.hashtags());
        auto walk = options.walk;
        walk.threads = options.threads;
        result.graph = build_sharing_graph(matrix, options.threads);
        result.scores = all_similarities(*result.graph, idx, walk);
        result.classification.hashtags = classify_hashtags(*result.scores, options.classify);
        result.classification.users = classify_users(matrix, result.classification.hashtags, t,
                                                     options.classify.near_tie_margin, options.threads);
        break;
    }
    case Method::Rdm:
        result.classification = rdm_classify(matrix, t, options.baseline.rng_seed);
        break;
    case Method::Srm: {
        result.graph = build_cooccurrence_graph(result.corpus);
        const auto idx = seeds.resolve(matrix.hashtags());
        result.scores = srm_similarities(*result.graph, idx, options.baseline.rho, options.threads);
        result.classification.hashtags = classify_by_argmax(*result.scores);
        result.classification.users =
            classify_users_by_majority(matrix, result.classification.hashtags, t);
        break;
    }
    case Method::Hsm:
        result.classification = hsm_classify(matrix, seeds);
        break;
    case Method::Lpm:
        result.classification = lpm_classify(result.corpus, seeds, options.baseline);
        break;
    }
    return result;
}

} // namespace stancewalk
