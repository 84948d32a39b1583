#include "curvlab/graph.hpp"

#include <algorithm>
#include <queue>

namespace curvlab {

Graph::Graph(const SimplicialComplex& X)
    : labels_(X.vertices().begin(), X.vertices().end()),
      adjacency_(labels_.size(), VertexSet(labels_.size()))
{
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (VertexId u : X.neighbors(labels_[i])) {
            adjacency_[i].set(*index_of(u));
        }
    }
    build_lists();
}

Graph Graph::induced(const VertexSet& keep) const
{
    Graph g;
    std::vector<std::size_t> old;
    for (auto i = keep.find_first(); i != VertexSet::npos; i = keep.find_next(i)) {
        old.push_back(i);
        g.labels_.push_back(labels_[i]);
    }
    const std::size_t n = old.size();
    g.adjacency_.assign(n, VertexSet(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (adjacency_[old[a]].test(old[b])) {
                g.adjacency_[a].set(b);
                g.adjacency_[b].set(a);
            }
        }
    }
    g.build_lists();
    return g;
}

void Graph::build_lists()
{
    lists_.assign(adjacency_.size(), {});
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
        const auto& nb = adjacency_[i];
        for (auto j = nb.find_first(); j != VertexSet::npos; j = nb.find_next(j)) lists_[i].push_back(j);
    }
}

std::optional<std::size_t> Graph::index_of(VertexId v) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

VertexSet Graph::closed_neighborhood(std::size_t i) const
{
    VertexSet s = adjacency_[i];
    s.set(i);
    return s;
}

VertexSet Graph::full_set() const
{
    VertexSet s(size());
    s.set();
    return s;
}

std::vector<VertexId> Graph::to_labels(const VertexSet& s) const
{
    std::vector<VertexId> out;
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(labels_[i]);
    return out;
}

std::vector<VertexId> Graph::to_labels(std::span<const std::size_t> idx) const
{
    std::vector<VertexId> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(labels_[i]);
    return out;
}

namespace {

struct CycleSearch {
    const Graph& g;
    std::size_t min_len;
    std::size_t max_len;
    std::size_t limit;
    std::vector<std::vector<std::size_t>>& out;
    std::vector<std::size_t> path;
    // block[x] > 0: x lies on the path or next to an interior path vertex.
    std::vector<int> block;

    bool full() const { return out.size() >= limit; }

    void extend()
    {
        const std::size_t m = path.size();
        const std::size_t last = path[m - 1];
        const std::size_t start = path[0];
        for (std::size_t x : g.neighbor_list(last)) {
            if (x <= start || block[x] > 0) continue;
            if (m >= 2 && g.adjacent(x, start)) {
                // x closes the cycle; extending past it would add a chord.
                if (m + 1 >= std::max<std::size_t>(min_len, 4) && path[1] < x) {
                    std::vector<std::size_t> c = path;
                    c.push_back(x);
                    out.push_back(std::move(c));
                    if (full()) return;
                }
                continue;
            }
            if (m + 1 >= max_len) continue;
            if (m >= 2) {
                for (std::size_t y : g.neighbor_list(last)) ++block[y];
            }
            ++block[x];
            path.push_back(x);
            extend();
            path.pop_back();
            --block[x];
            if (m >= 2) {
                for (std::size_t y : g.neighbor_list(last)) --block[y];
            }
            if (full()) return;
        }
    }
};

}  // namespace

std::vector<std::vector<std::size_t>> induced_cycles(const Graph& g, std::size_t min_len,
                                                     std::size_t max_len, std::size_t limit)
{
    std::vector<std::vector<std::size_t>> out;
    const std::size_t n = g.size();
    if (max_len < 4 || max_len < min_len || limit == 0) return out;
    for (std::size_t s = 0; s < n; ++s) {
        CycleSearch search{g, min_len, max_len, limit, out, {s}, std::vector<int>(n, 0)};
        search.block[s] = 1;
        search.extend();
        if (out.size() >= limit) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> bfs_distances(const Graph& g, std::size_t source)
{
    std::vector<int> dist(g.size(), -1);
    std::queue<std::size_t> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        auto i = q.front();
        q.pop();
        for (std::size_t j : g.neighbor_list(i)) {
            if (dist[j] < 0) {
                dist[j] = dist[i] + 1;
                q.push(j);
            }
        }
    }
    return dist;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) {
        VertexSet rest = s;
        rest.reset(i);
        if (!rest.is_subset_of(g.neighbors(i))) return false;
    }
    return true;
}

}  // namespace curvlab
