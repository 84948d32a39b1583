#include "curvlab/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "curvlab/errors.hpp"
#include "curvlab/graph.hpp"

namespace curvlab {

int ExtendedInt::value() const
{
    if (is_infinite()) {
        throw DomainError("ExtendedInt: value of infinity requested");
    }
    return value_;
}

std::string ExtendedInt::to_string() const
{
    return is_infinite() ? std::string("inf") : std::to_string(value_);
}

// ---------------------------------------------------------------- Simplex

namespace {

void require_strictly_sorted(const std::vector<VertexId>& v)
{
    if (v.empty()) {
        throw InputError("simplex must be nonempty");
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] >= v[i]) {
            std::ostringstream os;
            os << "simplex vertices must be strictly increasing, got";
            for (auto x : v) os << ' ' << x;
            throw InputError(os.str());
        }
    }
}

}  // namespace

Simplex::Simplex(std::vector<VertexId> sorted_vertices) : vertices_(std::move(sorted_vertices))
{
    require_strictly_sorted(vertices_);
}

Simplex::Simplex(std::initializer_list<VertexId> sorted_vertices)
    : Simplex(std::vector<VertexId>(sorted_vertices))
{
}

Simplex Simplex::from_unordered(std::vector<VertexId> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    return Simplex(std::move(vertices));
}

Simplex Simplex::unchecked(std::vector<VertexId> sorted_vertices)
{
    Simplex s;
    s.vertices_ = std::move(sorted_vertices);
    return s;
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const
{
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

Simplex Simplex::without_index(std::size_t i) const
{
    std::vector<VertexId> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
        if (j != i) out.push_back(vertices_[j]);
    }
    return unchecked(std::move(out));
}

Simplex Simplex::joined(const Simplex& other) const
{
    std::vector<VertexId> out;
    out.reserve(vertices_.size() + other.vertices_.size());
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                   other.vertices_.end(), std::back_inserter(out));
    return unchecked(std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const
{
    std::vector<VertexId> out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out));
    return unchecked(std::move(out));
}

std::string Simplex::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) os << ',';
        os << vertices_[i];
    }
    os << ']';
    return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (VertexId v : s.vertices()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

CycleSubcomplex CycleSubcomplex::canonical() const
{
    const std::size_t n = vertices.size();
    if (n == 0) return *this;
    std::size_t m = static_cast<std::size_t>(
        std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    std::vector<VertexId> fwd, bwd;
    fwd.reserve(n);
    bwd.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        fwd.push_back(vertices[(m + i) % n]);
        bwd.push_back(vertices[(m + n - i) % n]);
    }
    return CycleSubcomplex{std::min(fwd, bwd)};
}

// ------------------------------------------------------ SimplicialComplex

SimplicialComplex SimplicialComplex::from_maximal_faces(std::span<const Simplex> maximal,
                                                        std::size_t max_faces)
{
    std::vector<Simplex> faces;
    for (const Simplex& m : maximal) {
        if (m.empty()) {
            throw InputError("empty simplex in maximal face list");
        }
        std::vector<VertexId> check(m.vertices().begin(), m.vertices().end());
        require_strictly_sorted(check);
        if (m.size() > 24) {
            throw ResourceError("simplex with " + std::to_string(m.size()) +
                                " vertices is too large to close downward");
        }
        const std::size_t n = m.size();
        const std::uint32_t limit = 1u << n;
        for (std::uint32_t mask = 1; mask < limit; ++mask) {
            std::vector<VertexId> sub;
            sub.reserve(static_cast<std::size_t>(__builtin_popcount(mask)));
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) sub.push_back(m[i]);
            }
            faces.push_back(Simplex::unchecked(std::move(sub)));
        }
        if (max_faces < kNoFaceCap / 8 && faces.size() > 4 * max_faces + 64) {
            std::sort(faces.begin(), faces.end());
            faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
            if (faces.size() > max_faces) {
                throw ResourceError("face cap exceeded (" + std::to_string(max_faces) + ")");
            }
        }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.size() > max_faces) {
        throw ResourceError("face cap exceeded (" + std::to_string(max_faces) + ")");
    }
    return from_closed_faces_unchecked(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_maximal_faces(
    const std::vector<std::vector<VertexId>>& maximal, std::size_t max_faces)
{
    std::vector<Simplex> simplices;
    simplices.reserve(maximal.size());
    for (const auto& m : maximal) simplices.emplace_back(m);
    return from_maximal_faces(simplices, max_faces);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Simplex> faces)
{
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (const Simplex& f : faces) {
        if (f.empty()) throw InputError("empty simplex in face list");
        if (f.size() < 2) continue;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (!std::binary_search(faces.begin(), faces.end(), f.without_index(i))) {
                throw InputError("face set not downward closed at " + f.to_string());
            }
        }
    }
    return from_closed_faces_unchecked(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_closed_faces_unchecked(std::vector<Simplex> sorted_faces)
{
    SimplicialComplex X;
    X.faces_ = std::move(sorted_faces);
    X.index();
    return X;
}

void SimplicialComplex::index()
{
    vertices_.clear();
    dim_counts_.clear();
    for (const Simplex& f : faces_) {
        const auto d = static_cast<std::size_t>(f.dim());
        if (dim_counts_.size() <= d) dim_counts_.resize(d + 1, 0);
        ++dim_counts_[d];
        if (f.size() == 1) vertices_.push_back(f[0]);
    }
    std::sort(vertices_.begin(), vertices_.end());
    neighbors_.assign(vertices_.size(), {});
    for (const Simplex& f : faces_) {
        if (f.size() != 2) continue;
        auto a = *vertex_index(f[0]);
        auto b = *vertex_index(f[1]);
        neighbors_[a].push_back(f[1]);
        neighbors_[b].push_back(f[0]);
    }
    for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

std::size_t SimplicialComplex::face_count(int dim) const
{
    if (dim < 0 || static_cast<std::size_t>(dim) >= dim_counts_.size()) return 0;
    return dim_counts_[static_cast<std::size_t>(dim)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const { return dim_counts_; }

std::vector<Simplex> SimplicialComplex::faces_of_dim(int dim) const
{
    std::vector<Simplex> out;
    out.reserve(face_count(dim));
    for (const Simplex& f : faces_) {
        if (f.dim() == dim) out.push_back(f);
    }
    return out;
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const
{
    // A face is maximal iff no one-vertex extension is a face.
    std::vector<Simplex> out;
    for (const Simplex& f : faces_) {
        bool maximal = true;
        for (VertexId u : neighbors(f[0])) {
            if (f.contains(u)) continue;
            bool all = true;
            for (VertexId w : f.vertices()) {
                if (!adjacent(u, w)) { all = false; break; }
            }
            if (!all) continue;
            std::vector<VertexId> ext(f.vertices().begin(), f.vertices().end());
            ext.insert(std::upper_bound(ext.begin(), ext.end(), u), u);
            if (contains(Simplex::unchecked(std::move(ext)))) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    return std::binary_search(faces_.begin(), faces_.end(), s);
}

bool SimplicialComplex::has_vertex(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<std::size_t> SimplicialComplex::vertex_index(VertexId v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::span<const VertexId> SimplicialComplex::neighbors(VertexId v) const
{
    auto i = vertex_index(v);
    if (!i) throw DomainError("vertex " + std::to_string(v) + " not in complex");
    return neighbors_[*i];
}

bool SimplicialComplex::adjacent(VertexId u, VertexId v) const
{
    auto i = vertex_index(u);
    if (!i) return false;
    const auto& n = neighbors_[*i];
    return std::binary_search(n.begin(), n.end(), v);
}

std::string SimplicialComplex::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const Simplex& f : maximal_faces()) {
        if (!first) os << ' ';
        first = false;
        os << f.to_string();
    }
    os << '}';
    return os.str();
}

// ------------------------------------------------------------ operations

SimplicialComplex clique_complex(std::span<const VertexId> vertices,
                                 const std::function<bool(VertexId, VertexId)>& adjacent,
                                 int max_dim, std::size_t max_faces)
{
    std::vector<VertexId> verts(vertices.begin(), vertices.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const std::size_t n = verts.size();
    // Forward neighbours (higher index) per vertex.
    std::vector<std::vector<std::size_t>> fwd(n);
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adjacent(verts[i], verts[j])) {
                fwd[i].push_back(j);
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    std::vector<Simplex> faces;
    std::vector<std::size_t> stack;
    const std::size_t cap_size = max_dim < 0 ? n : static_cast<std::size_t>(max_dim) + 1;
    auto emit = [&] {
        std::vector<VertexId> s;
        s.reserve(stack.size());
        for (auto i : stack) s.push_back(verts[i]);
        faces.push_back(Simplex::unchecked(std::move(s)));
        if (faces.size() > max_faces) {
            throw ResourceError("face cap exceeded (" + std::to_string(max_faces) + ")");
        }
    };
    std::function<void(const VertexSet&)> grow = [&](const VertexSet& candidates) {
        emit();
        if (stack.size() >= cap_size) return;
        for (auto j = candidates.find_first(); j != VertexSet::npos; j = candidates.find_next(j)) {
            stack.push_back(j);
            VertexSet next = candidates & adj[j];
            // only extend upwards to avoid repeats
            for (auto k = next.find_first(); k != VertexSet::npos && k <= j; k = next.find_next(k)) {
                next.reset(k);
            }
            grow(next);
            stack.pop_back();
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        stack.assign(1, i);
        VertexSet next = adj[i];
        for (auto k = next.find_first(); k != VertexSet::npos && k <= i; k = next.find_next(k)) {
            next.reset(k);
        }
        grow(next);
    }
    std::sort(faces.begin(), faces.end());
    return SimplicialComplex::from_closed_faces_unchecked(std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma)
{
    if (!X.contains(sigma)) {
        throw DomainError("link: " + sigma.to_string() + " is not a face");
    }
    std::vector<Simplex> out;
    for (const Simplex& tau : X.faces()) {
        if (!tau.disjoint_from(sigma)) continue;
        if (X.contains(tau.joined(sigma))) out.push_back(tau);
    }
    return SimplicialComplex::from_closed_faces_unchecked(std::move(out));
}

SimplicialComplex span(const SimplicialComplex& X, std::span<const VertexId> A)
{
    std::vector<VertexId> set(A.begin(), A.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (VertexId v : set) {
        if (!X.has_vertex(v)) {
            throw DomainError("span: vertex " + std::to_string(v) + " not in complex");
        }
    }
    std::vector<Simplex> out;
    for (const Simplex& f : X.faces()) {
        bool inside = std::includes(set.begin(), set.end(), f.vertices().begin(), f.vertices().end());
        if (inside) out.push_back(f);
    }
    return SimplicialComplex::from_closed_faces_unchecked(std::move(out));
}

bool is_subcomplex(const SimplicialComplex& Y, const SimplicialComplex& X)
{
    return std::all_of(Y.faces().begin(), Y.faces().end(),
                       [&](const Simplex& f) { return X.contains(f); });
}

bool is_full_subcomplex(const SimplicialComplex& X, const SimplicialComplex& Y)
{
    if (!is_subcomplex(Y, X)) {
        throw DomainError("is_full_subcomplex: Y is not a subcomplex of X");
    }
    return span(X, Y.vertices()) == Y;
}

std::optional<Simplex> non_flag_witness(const SimplicialComplex& X)
{
    // Extending faces dimension by dimension finds a minimal non-face clique
    // first: all its proper subsets are faces.
    for (int d = 0; d <= X.dimension(); ++d) {
        for (const Simplex& f : X.faces()) {
            if (f.dim() != d) continue;
            for (VertexId u : X.neighbors(f[f.size() - 1])) {
                if (u <= f[f.size() - 1]) continue;
                bool clique = true;
                for (std::size_t i = 0; i + 1 < f.size(); ++i) {
                    if (!X.adjacent(f[i], u)) { clique = false; break; }
                }
                if (!clique) continue;
                std::vector<VertexId> ext(f.vertices().begin(), f.vertices().end());
                ext.push_back(u);
                Simplex c = Simplex::unchecked(std::move(ext));
                if (!X.contains(c)) return c;
            }
        }
    }
    return std::nullopt;
}

bool is_flag(const SimplicialComplex& X) { return !non_flag_witness(X).has_value(); }

std::vector<CycleSubcomplex> full_cycles_below(const SimplicialComplex& X, int k)
{
    if (k < 4) throw DomainError("full_cycles_below: k must be >= 4");
    std::vector<CycleSubcomplex> out;
    if (k == 4) return out;
    Graph g(X);
    for (const auto& c : induced_cycles(g, 4, static_cast<std::size_t>(k - 1))) {
        out.push_back(CycleSubcomplex{g.to_labels(c)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_k_large(const SimplicialComplex& X, int k)
{
    if (k < 4) throw DomainError("is_k_large: k must be >= 4");
    if (!is_flag(X)) return false;
    if (k == 4) return true;
    Graph g(X);
    return induced_cycles(g, 4, static_cast<std::size_t>(k - 1), 1).empty();
}

std::vector<int> distances_from(const SimplicialComplex& X, VertexId v)
{
    auto src = X.vertex_index(v);
    if (!src) throw DomainError("vertex " + std::to_string(v) + " not in complex");
    std::vector<int> dist(X.vertex_count(), -1);
    std::queue<std::size_t> q;
    dist[*src] = 0;
    q.push(*src);
    while (!q.empty()) {
        auto i = q.front();
        q.pop();
        for (VertexId u : X.neighbors(X.vertices()[i])) {
            auto j = *X.vertex_index(u);
            if (dist[j] < 0) {
                dist[j] = dist[i] + 1;
                q.push(j);
            }
        }
    }
    return dist;
}

bool is_connected(const SimplicialComplex& X)
{
    if (X.empty()) return true;
    auto d = distances_from(X, X.vertices()[0]);
    return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

ExtendedInt graph_distance(const SimplicialComplex& X, VertexId u, VertexId v)
{
    auto d = distances_from(X, u);
    auto j = X.vertex_index(v);
    if (!j) throw DomainError("vertex " + std::to_string(v) + " not in complex");
    return d[*j] < 0 ? ExtendedInt::infinite() : ExtendedInt(d[*j]);
}

namespace {

SimplicialComplex span_by_distance(const SimplicialComplex& X, VertexId v, int radius, bool exact)
{
    if (radius < 0) throw DomainError("radius must be nonnegative");
    auto d = distances_from(X, v);
    std::vector<VertexId> keep;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) continue;
        if (exact ? d[i] == radius : d[i] <= radius) keep.push_back(X.vertices()[i]);
    }
    return span(X, keep);
}

}  // namespace

SimplicialComplex ball(const SimplicialComplex& X, VertexId v, int radius)
{
    return span_by_distance(X, v, radius, false);
}

SimplicialComplex sphere(const SimplicialComplex& X, VertexId v, int radius)
{
    return span_by_distance(X, v, radius, true);
}

bool is_cycle_in(const SimplicialComplex& X, const CycleSubcomplex& c, bool full)
{
    const auto& v = c.vertices;
    const std::size_t n = v.size();
    if (n < 3) return false;
    std::vector<VertexId> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!X.has_vertex(v[i]) || !X.adjacent(v[i], v[(i + 1) % n])) return false;
    }
    if (!full) return true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (X.adjacent(v[i], v[j])) return false;
        }
    }
    // a 3-cycle is full only if the triangle is missing
    if (n == 3) return !X.contains(Simplex::unchecked(sorted));
    return true;
}

SimplicialComplex cone(const SimplicialComplex& X, VertexId apex)
{
    if (X.has_vertex(apex)) {
        throw DomainError("cone: apex " + std::to_string(apex) + " already a vertex");
    }
    std::vector<Simplex> faces(X.faces().begin(), X.faces().end());
    faces.push_back(Simplex{apex});
    for (const Simplex& f : X.faces()) faces.push_back(f.joined(Simplex{apex}));
    std::sort(faces.begin(), faces.end());
    return SimplicialComplex::from_closed_faces_unchecked(std::move(faces));
}

std::optional<std::vector<std::pair<VertexId, VertexId>>> find_isomorphism(
    const SimplicialComplex& X, const SimplicialComplex& Y)
{
    if (X.f_vector() != Y.f_vector()) return std::nullopt;
    const Graph gx(X), gy(Y);
    const std::size_t n = gx.size();
    std::vector<std::size_t> degx(n), degy(n);
    for (std::size_t i = 0; i < n; ++i) {
        degx[i] = gx.neighbors(i).count();
        degy[i] = gy.neighbors(i).count();
    }
    // Visit X vertices in BFS order so adjacency constraints bite early.
    std::vector<std::size_t> order;
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            auto i = q.front();
            q.pop();
            order.push_back(i);
            const auto& nb = gx.neighbors(i);
            for (auto j = nb.find_first(); j != VertexSet::npos; j = nb.find_next(j)) {
                if (!seen[j]) { seen[j] = true; q.push(j); }
            }
        }
    }
    std::vector<std::size_t> image(n, n);
    std::vector<bool> used(n, false);
    auto faces_match = [&] {
        for (const Simplex& f : X.faces()) {
            std::vector<VertexId> m;
            m.reserve(f.size());
            for (VertexId v : f.vertices()) m.push_back(gy.label(image[*gx.index_of(v)]));
            std::sort(m.begin(), m.end());
            if (!Y.contains(Simplex::unchecked(std::move(m)))) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
        if (pos == n) return faces_match();
        const std::size_t i = order[pos];
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || degx[i] != degy[j]) continue;
            bool ok = true;
            for (std::size_t p = 0; p < pos && ok; ++p) {
                const std::size_t a = order[p];
                if (gx.adjacent(i, a) != gy.adjacent(j, image[a])) ok = false;
            }
            if (!ok) continue;
            image[i] = j;
            used[j] = true;
            if (assign(pos + 1)) return true;
            used[j] = false;
        }
        image[i] = n;
        return false;
    };
    if (!assign(0)) return std::nullopt;
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(gx.label(i), gy.label(image[i]));
    return out;
}

}  // namespace curvlab
