#include "stancewalk/graph.hpp"

#include "stancewalk/error.hpp"
#include "stancewalk/parallel.hpp"
#include "stancewalk/table.hpp"

#include <algorithm>
#include <ostream>

namespace stancewalk {

HashtagGraph::HashtagGraph(std::vector<std::string> hashtags, std::vector<std::vector<Edge>> rows,
                           GraphFlavor flavor)
    : hashtags_(std::move(hashtags)), flavor_(flavor) {
    offsets_.assign(hashtags_.size() + 1, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        total += rows[i].size();
        offsets_[i + 1] = total;
    }
    edges_.reserve(total);
    for (auto& row : rows)
        edges_.insert(edges_.end(), row.begin(), row.end());
}

double HashtagGraph::weight(std::size_t i, std::size_t j) const {
    const auto row = neighbors(i);
    const auto it = std::lower_bound(row.begin(), row.end(), j,
                                     [](const Edge& e, std::size_t t) { return e.target < t; });
    return it != row.end() && it->target == j ? it->weight : 0.0;
}

HashtagGraph build_sharing_graph(const SharingMatrix& matrix, int threads) {
    if (matrix.empty())
        throw DomainError("cannot build a graph from an empty sharing matrix");
    const auto m = matrix.num_hashtags();
    std::vector<std::vector<HashtagGraph::Edge>> rows(m);

    parallel_for_chunks(m, threads, [&](std::size_t begin, std::size_t end) {
        // Integer numerators: exact, so the row is independent of accumulation order.
        std::vector<std::uint64_t> acc(m, 0);
        std::vector<std::uint32_t> touched;
        for (std::size_t i = begin; i < end; ++i) {
            touched.clear();
            for (const auto& user : matrix.hashtag_column(i)) {
                for (const auto& e : matrix.user_row(user.index)) {
                    if (e.index == i)
                        continue;
                    if (acc[e.index] == 0)
                        touched.push_back(e.index);
                    acc[e.index] += std::min(user.count, e.count);
                }
            }
            std::sort(touched.begin(), touched.end());
            auto& row = rows[i];
            row.reserve(touched.size());
            const auto total_i = matrix.hashtag_total(i);
            for (const auto j : touched) {
                const auto denom = std::min(total_i, matrix.hashtag_total(j));
                row.push_back({j, static_cast<double>(acc[j]) / static_cast<double>(denom)});
                acc[j] = 0;
            }
        }
    });
    return HashtagGraph(matrix.hashtags(), std::move(rows), GraphFlavor::Sharing);
}

HashtagGraph build_cooccurrence_graph(std::span<const PostRecord> records,
                                      const std::vector<std::string>& vocabulary) {
    const auto m = vocabulary.size();
    std::vector<std::vector<HashtagGraph::Edge>> rows(m);
    std::vector<std::uint32_t> ids;
    for (const auto& post : records) {
        ids.clear();
        for (const auto& tag : post.hashtags) {
            const auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(), tag);
            if (it != vocabulary.end() && *it == tag)
                ids.push_back(static_cast<std::uint32_t>(it - vocabulary.begin()));
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (const auto a : ids)
            for (const auto b : ids)
                if (a != b)
                    rows[a].push_back({b, 1.0});
    }
    // Merge duplicate targets into counts.
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(),
                  [](const HashtagGraph::Edge& x, const HashtagGraph::Edge& y) {
                      return x.target < y.target;
                  });
        std::size_t out = 0;
        for (std::size_t r = 0; r < row.size(); ++r) {
            if (out > 0 && row[out - 1].target == row[r].target)
                row[out - 1].weight += row[r].weight;
            else
                row[out++] = row[r];
        }
        row.resize(out);
        row.shrink_to_fit();
    }
    return HashtagGraph(vocabulary, std::move(rows), GraphFlavor::Cooccurrence);
}

HashtagGraph build_cooccurrence_graph(const Corpus& corpus) {
    return build_cooccurrence_graph(corpus.require_posts("the co-occurrence graph"),
                                    corpus.matrix.hashtags());
}

void write_graph_dump(std::ostream& out, const HashtagGraph& graph) {
    TableWriter table(out, {"hashtag_i", "hashtag_j", "weight"});
    for (std::size_t i = 0; i < graph.size(); ++i)
        for (const auto& e : graph.neighbors(i))
            if (e.target > i)
                table.row(graph.hashtags()[i], graph.hashtags()[e.target], e.weight);
}

} // namespace stancewalk
