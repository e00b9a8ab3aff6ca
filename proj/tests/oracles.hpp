#pragma once

// Dense reference implementations used to check the sparse engine. They follow the textual
// definitions directly and share no code with src/.

#include "stancewalk/graph.hpp"
#include "stancewalk/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense zeros(std::size_t n) { return Dense(n, std::vector<double>(n, 0.0)); }

inline std::vector<std::string> names(std::size_t m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m; ++i)
        out.push_back("h" + std::to_string(i));
    return out;
}

/// Symmetric dense weights to the sparse graph type (zeros dropped, diagonal ignored).
inline stancewalk::HashtagGraph to_graph(const Dense& w,
                                         stancewalk::GraphFlavor flavor = stancewalk::GraphFlavor::Sharing) {
    std::vector<std::vector<stancewalk::HashtagGraph::Edge>> rows(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            if (i != j && w[i][j] != 0.0)
                rows[i].push_back({static_cast<std::uint32_t>(j), w[i][j]});
    return stancewalk::HashtagGraph(names(w.size()), std::move(rows), flavor);
}

inline Dense to_dense(const stancewalk::HashtagGraph& g) {
    auto out = zeros(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (const auto& e : g.neighbors(i))
            out[i][e.target] = e.weight;
    return out;
}

/// Triple loop over users for every hashtag pair.
inline Dense sharing_weights(const std::vector<std::vector<unsigned>>& counts) {
    const std::size_t n = counts.size();
    const std::size_t m = n ? counts[0].size() : 0;
    std::vector<double> totals(m, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < m; ++i)
            totals[i] += counts[k][i];
    auto a = zeros(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || totals[i] == 0 || totals[j] == 0)
                continue;
            double num = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                num += std::min(counts[k][i], counts[k][j]);
            a[i][j] = num / std::min(totals[i], totals[j]);
        }
    return a;
}

/// -sum p ln p / ln t over the non-zero part of `w`; 0 for an all-zero vector.
inline double entropy(const std::vector<double>& w) {
    double total = 0.0;
    for (const double x : w)
        total += x;
    if (total == 0.0)
        return 0.0;
    double h = 0.0;
    for (const double x : w)
        if (x > 0.0)
            h -= (x / total) * std::log(x / total);
    return h / std::log(static_cast<double>(w.size()));
}

struct TransitionRules {
    bool block = true;
    bool dampen = true;
    bool seed_edges_only = false;
};

/// Working copy of A: block other seeds, dampen non-seed hashtags, row-normalize.
inline Dense transition(const Dense& a, const std::vector<std::size_t>& seeds, std::size_t active,
                        TransitionRules rules = {}) {
    const std::size_t m = a.size();
    const auto is_seed = [&](std::size_t i) { return std::find(seeds.begin(), seeds.end(), i) != seeds.end(); };
    std::vector<double> factor(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (is_seed(i))
            continue;
        std::vector<double> to_seeds;
        for (const auto s : seeds)
            to_seeds.push_back(a[i][s]);
        std::size_t degree = 0;
        for (std::size_t j = 0; j < m; ++j)
            degree += (j != i && a[i][j] != 0.0);
        factor[i] = degree ? (1.0 - entropy(to_seeds)) / static_cast<double>(degree) : 0.0;
    }
    auto w = a;
    for (std::size_t i = 0; i < m; ++i)
        w[i][i] = 0.0;
    if (rules.block)
        for (std::size_t c = 0; c < seeds.size(); ++c) {
            if (c == active)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                w[seeds[c]][j] = w[j][seeds[c]] = 0.0;
        }
    if (rules.dampen)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (rules.seed_edges_only) {
                    if (!is_seed(i) && is_seed(j))
                        w[i][j] *= factor[i];
                } else {
                    if (!is_seed(i))
                        w[i][j] *= factor[i];
                    if (!is_seed(j))
                        w[i][j] *= factor[j];
                }
            }
    for (auto& row : w) {
        double sum = 0.0;
        for (const double x : row)
            sum += x;
        if (sum > 0.0)
            for (double& x : row)
                x /= sum;
    }
    return w;
}

/// Sum over every walk of length 1..rho from `start` of its probability, credited to its end.
inline std::vector<double> path_enumeration(const Dense& t, std::size_t start, int rho) {
    std::vector<double> s(t.size(), 0.0);
    std::function<void(std::size_t, double, int)> extend = [&](std::size_t at, double p, int steps) {
        if (steps == rho)
            return;
        for (std::size_t next = 0; next < t.size(); ++next) {
            if (t[at][next] == 0.0)
                continue;
            const double q = p * t[at][next];
            s[next] += q;
            extend(next, q, steps + 1);
        }
    };
    extend(start, 1.0, 0);
    return s;
}

/// Random symmetric graph on m nodes with edge density `p` and weights in (0, 1].
template <typename Rng>
Dense random_weights(std::size_t m, double p, Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto w = zeros(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (u(rng) < p)
                w[i][j] = w[j][i] = 1.0 - u(rng);
    return w;
}

/// Random count table (users x hashtags) with every row and column non-empty.
template <typename Rng>
std::vector<std::vector<unsigned>> random_counts(std::size_t n, std::size_t m, unsigned max_count, Rng& rng) {
    std::uniform_int_distribution<unsigned> c(0, max_count);
    std::vector<std::vector<unsigned>> r(n, std::vector<unsigned>(m, 0));
    for (auto& row : r)
        for (auto& x : row)
            x = c(rng);
    for (std::size_t k = 0; k < n; ++k)
        r[k][k % m] += 1;
    for (std::size_t i = 0; i < m; ++i)
        r[i % n][i] += 1;
    return r;
}

inline std::vector<stancewalk::ShareTriple> to_triples(const std::vector<std::vector<unsigned>>& r) {
    std::vector<stancewalk::ShareTriple> out;
    for (std::size_t k = 0; k < r.size(); ++k)
        for (std::size_t i = 0; i < r[k].size(); ++i)
            if (r[k][i])
                out.push_back({"u" + std::to_string(k), "h" + std::to_string(i), r[k][i]});
    return out;
}

} // namespace oracle
