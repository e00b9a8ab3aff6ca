#pragma once

#include "stancewalk/ingest.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace stancewalk {

enum class GraphFlavor { Sharing, Cooccurrence };

/**
 * Symmetric weighted graph over hashtags in compressed sparse row form.
 * Node i is the hashtag at position i of the hashtag index it was built from. Only non-zero
 * off-diagonal weights are stored; each row is sorted by target.
 */
class HashtagGraph {
public:
    struct Edge {
        std::uint32_t target;
        double weight;
    };

    HashtagGraph() = default;

    /// Adopts per-row adjacency; rows must be sorted, symmetric, and free of self loops.
    HashtagGraph(std::vector<std::string> hashtags, std::vector<std::vector<Edge>> rows,
                 GraphFlavor flavor);

    std::size_t size() const { return hashtags_.size(); }
    /// Number of undirected edges.
    std::size_t num_edges() const { return edges_.size() / 2; }
    GraphFlavor flavor() const { return flavor_; }
    const std::vector<std::string>& hashtags() const { return hashtags_; }

    std::span<const Edge> neighbors(std::size_t i) const {
        return {edges_.data() + offsets_[i], edges_.data() + offsets_[i + 1]};
    }
    /// Number of non-zero off-diagonal entries in row i.
    std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
    /// A_ij, zero when absent.
    double weight(std::size_t i, std::size_t j) const;

private:
    std::vector<std::string> hashtags_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Edge> edges_;
    GraphFlavor flavor_ = GraphFlavor::Sharing;
};

/**
 * Projects the sharing matrix onto hashtags:
 *   A_ij = sum_k min(R_ki, R_kj) / min(total_i, total_j)   for i != j.
 * Rows are computed independently (one dense accumulator per worker), so the result does not
 * depend on `threads`.
 */
HashtagGraph build_sharing_graph(const SharingMatrix& matrix, int threads = 1);

/**
 * Co-occurrence graph: A_ij is the number of posts containing both h_i and h_j, each distinct
 * pair counted once per post. Nodes follow `vocabulary` (sorted); tags outside it are ignored.
 */
HashtagGraph build_cooccurrence_graph(std::span<const PostRecord> records,
                                      const std::vector<std::string>& vocabulary);

/// Same, over the corpus hashtag index. UnsupportedInputError for aggregate-only corpora.
HashtagGraph build_cooccurrence_graph(const Corpus& corpus);

/// Writes `hashtag_i,hashtag_j,weight` rows (i < j) after a header.
void write_graph_dump(std::ostream& out, const HashtagGraph& graph);

} // namespace stancewalk
