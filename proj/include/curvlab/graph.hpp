#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "curvlab/simplicial_complex.hpp"

namespace curvlab {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Dense-index view of a 1-skeleton. Labels are sorted ascending, so index
// order and label order agree and canonical forms survive the translation.
class Graph {
public:
    Graph() = default;
    explicit Graph(const SimplicialComplex& X);

    Graph induced(const VertexSet& keep) const;

    std::size_t size() const { return labels_.size(); }
    VertexId label(std::size_t i) const { return labels_[i]; }
    std::span<const VertexId> labels() const { return labels_; }
    std::optional<std::size_t> index_of(VertexId v) const;

    const VertexSet& neighbors(std::size_t i) const { return adjacency_[i]; }
    std::span<const std::size_t> neighbor_list(std::size_t i) const { return lists_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i].test(j); }
    VertexSet closed_neighborhood(std::size_t i) const;
    VertexSet empty_set() const { return VertexSet(size()); }
    VertexSet full_set() const;

    std::vector<VertexId> to_labels(const VertexSet& s) const;
    std::vector<VertexId> to_labels(std::span<const std::size_t> idx) const;

private:
    std::vector<VertexId> labels_;
    std::vector<VertexSet> adjacency_;
    std::vector<std::vector<std::size_t>> lists_;

    void build_lists();
};

// Induced (chordless) cycles with min_len <= length <= max_len, each once,
// canonical (minimal index first, then the smaller neighbour), in
// lexicographic order. Stops after `limit` cycles.
std::vector<std::vector<std::size_t>> induced_cycles(const Graph& g, std::size_t min_len,
                                                     std::size_t max_len,
                                                     std::size_t limit = static_cast<std::size_t>(-1));

// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, std::size_t source);

bool is_clique(const Graph& g, const VertexSet& s);

}  // namespace curvlab
