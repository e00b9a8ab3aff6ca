#include "stancewalk/baselines.hpp"

#include "stancewalk/error.hpp"
#include "stancewalk/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

namespace stancewalk {

std::string_view method_name(Method method) {
    switch (method) {
    case Method::Lrm:
        return "lrm";
    case Method::Rdm:
        return "rdm";
    case Method::Srm:
        return "srm";
    case Method::Hsm:
        return "hsm";
    case Method::Lpm:
        return "lpm";
    }
    return "lrm";
}

Method parse_method(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (const auto m : {Method::Lrm, Method::Rdm, Method::Srm, Method::Hsm, Method::Lpm})
        if (method_name(m) == lower)
            return m;
    throw DomainError("unknown method '" + std::string(name) + "' (expected lrm, rdm, srm, hsm, lpm)");
}

std::vector<Method> parse_method_list(std::string_view names) {
    std::vector<Method> out;
    while (!names.empty()) {
        const auto comma = names.find(',');
        const auto item = names.substr(0, comma);
        if (!item.empty())
            out.push_back(parse_method(item));
        if (comma == std::string_view::npos)
            break;
        names.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw DomainError("empty method list");
    return out;
}

namespace {

// Unbiased draw in [0, bound) by rejection; independent of the standard library's
// distribution implementations so labels are reproducible across toolchains.
std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % b);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<std::size_t>(x % b);
}

} // namespace

Classification rdm_classify(const SharingMatrix& matrix, std::size_t classes, std::uint64_t rng_seed) {
    if (classes == 0)
        throw DomainError("random assignment needs at least one class");
    std::mt19937_64 rng(rng_seed);
    Classification out;
    out.hashtags.resize(matrix.num_hashtags());
    for (auto& h : out.hashtags)
        h.cls = static_cast<int>(draw_below(rng, classes));
    out.users.resize(matrix.num_users());
    for (auto& u : out.users) {
        u.cls = static_cast<int>(draw_below(rng, classes));
        u.inclination.assign(classes, 0.0);
    }
    return out;
}

std::vector<UserAssignment> classify_users_by_majority(const SharingMatrix& matrix,
                                                       std::span<const HashtagAssignment> hashtags,
                                                       std::size_t classes) {
    if (hashtags.size() != matrix.num_hashtags())
        throw DomainError("hashtag assignments do not match the sharing matrix");
    std::vector<UserAssignment> out(matrix.num_users());
    for (std::size_t k = 0; k < matrix.num_users(); ++k) {
        auto& user = out[k];
        user.inclination.assign(classes, 0.0);
        for (const auto& e : matrix.user_row(k))
            if (hashtags[e.index].cls != kUnclassified)
                user.inclination[static_cast<std::size_t>(hashtags[e.index].cls)] += e.count;
        const auto best = argmax_with_ties(user.inclination);
        user.cls = best.cls;
        user.tie = best.tie;
        const auto total = static_cast<double>(matrix.user_total(k));
        for (auto& v : user.inclination)
            v /= total;
    }
    return out;
}

std::vector<HashtagAssignment> classify_by_argmax(const SimilarityScores& scores) {
    std::vector<HashtagAssignment> out(scores.hashtags());
    for (std::size_t i = 0; i < scores.hashtags(); ++i) {
        const auto best = argmax_with_ties(scores.column(i));
        out[i].cls = best.cls;
        out[i].tie = best.tie;
    }
    return out;
}

SimilarityScores srm_similarities(const HashtagGraph& graph, std::span<const std::size_t> seeds,
                                  int rho, int threads) {
    WalkConfig config;
    config.rho = rho;
    config.block_other_seeds = false;
    config.dampen = false;
    config.threads = threads;
    return all_similarities(graph, seeds, config);
}

Classification srm_classify(const Corpus& corpus, const SeedSet& seeds, const BaselineConfig& config,
                            int threads) {
    const auto graph = build_cooccurrence_graph(corpus);
    const auto idx = seeds.resolve(graph.hashtags());
    const auto scores = srm_similarities(graph, idx, config.rho, threads);
    Classification out;
    out.hashtags = classify_by_argmax(scores);
    out.users = classify_users_by_majority(corpus.matrix, out.hashtags, seeds.size());
    return out;
}

double column_cosine(const SharingMatrix& matrix, std::size_t i, std::size_t j) {
    const auto a = matrix.hashtag_column(i);
    const auto b = matrix.hashtag_column(j);
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (const auto& e : a)
        na += static_cast<double>(e.count) * e.count;
    for (const auto& e : b)
        nb += static_cast<double>(e.count) * e.count;
    // Both columns are sorted by user index.
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->index < ib->index) {
            ++ia;
        } else if (ib->index < ia->index) {
            ++ib;
        } else {
            dot += static_cast<double>(ia->count) * ib->count;
            ++ia;
            ++ib;
        }
    }
    if (na == 0.0 || nb == 0.0)
        return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

SimilarityScores hsm_similarities(const SharingMatrix& matrix, std::span<const std::size_t> seeds) {
    const auto m = matrix.num_hashtags();
    const auto n = matrix.num_users();
    SimilarityScores scores(seeds.size(), m);
    std::vector<double> norms(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& e : matrix.hashtag_column(i))
            norms[i] += static_cast<double>(e.count) * e.count;
        norms[i] = std::sqrt(norms[i]);
    }
    std::vector<double> seed_column(n);
    for (std::size_t c = 0; c < seeds.size(); ++c) {
        std::fill(seed_column.begin(), seed_column.end(), 0.0);
        for (const auto& e : matrix.hashtag_column(seeds[c]))
            seed_column[e.index] = e.count;
        const double seed_norm = norms[seeds[c]];
        for (std::size_t i = 0; i < m; ++i) {
            double dot = 0.0;
            for (const auto& e : matrix.hashtag_column(i))
                dot += seed_column[e.index] * e.count;
            if (dot > 0.0)
                scores.at(c, i) = dot / (seed_norm * norms[i]);
        }
    }
    return scores;
}

Classification hsm_classify(const SharingMatrix& matrix, const SeedSet& seeds) {
    const auto idx = seeds.resolve(matrix.hashtags());
    const auto scores = hsm_similarities(matrix, idx);
    Classification out;
    out.hashtags = classify_by_argmax(scores);
    out.users = classify_users_by_majority(matrix, out.hashtags, seeds.size());
    return out;
}

LabelPropagation propagate_labels(const HashtagGraph& graph, std::span<const std::size_t> seeds,
                                  int max_iterations, double tolerance) {
    if (!(tolerance > 0.0))
        throw DomainError("label propagation tolerance must be positive");
    const auto m = graph.size();
    const auto t = seeds.size();
    const auto transition = row_normalize(graph);
    LabelPropagation out;
    out.classes = t;
    out.labels.assign(m * t, 0.0);
    auto clamp = [&](std::vector<double>& labels) {
        for (std::size_t c = 0; c < t; ++c) {
            std::fill_n(labels.begin() + static_cast<std::ptrdiff_t>(seeds[c] * t), t, 0.0);
            labels[seeds[c] * t + c] = 1.0;
        }
    };
    clamp(out.labels);
    std::vector<double> next(m * t);
    while (out.iterations < max_iterations) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            const double* from = out.labels.data() + i * t;
            for (const auto& e : transition.row(i))
                for (std::size_t c = 0; c < t; ++c)
                    next[e.target * t + c] += e.probability * from[c];
        }
        clamp(next);
        double change = 0.0;
        for (std::size_t k = 0; k < next.size(); ++k)
            change = std::max(change, std::abs(next[k] - out.labels[k]));
        std::swap(out.labels, next);
        ++out.iterations;
        if (change < tolerance) {
            out.converged = true;
            break;
        }
    }
    return out;
}

Classification lpm_classify(const Corpus& corpus, const SeedSet& seeds, const BaselineConfig& config) {
    const auto graph = build_cooccurrence_graph(corpus);
    const auto idx = seeds.resolve(graph.hashtags());
    const auto labels = propagate_labels(graph, idx, config.max_iterations, config.tolerance);
    SimilarityScores scores(seeds.size(), graph.size());
    for (std::size_t i = 0; i < graph.size(); ++i)
        for (std::size_t c = 0; c < seeds.size(); ++c)
            scores.at(c, i) = labels.at(i, c);
    Classification out;
    out.hashtags = classify_by_argmax(scores);
    out.users = classify_users_by_majority(corpus.matrix, out.hashtags, seeds.size());
    out.converged = labels.converged;
    return out;
}

} // namespace stancewalk
