#include "curvlab/cubical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace curvlab {

namespace {

constexpr int kMaxCubeDim = 12;

std::string set_string(std::span<const VertexId> s)
{
    return Simplex::unchecked({s.begin(), s.end()}).to_string();
}

}  // namespace

Cube::Cube(std::vector<VertexId> vertices) : vertices_(std::move(vertices))
{
    const std::size_t n = vertices_.size();
    if (n == 0 || !std::has_single_bit(n)) {
        throw InputError("cube needs 2^d vertices, got " + std::to_string(n));
    }
    dim_ = std::countr_zero(n);
    if (dim_ > kMaxCubeDim) throw InputError("cube dimension " + std::to_string(dim_) + " is too large");
    auto s = vertex_set();
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("cube has repeated vertices");
}

std::vector<VertexId> Cube::vertex_set() const
{
    std::vector<VertexId> s = vertices_;
    std::sort(s.begin(), s.end());
    return s;
}

Cube Cube::face(std::uint32_t free_mask, std::uint32_t base) const
{
    const std::uint32_t full = (std::uint32_t{1} << dim_) - 1;
    free_mask &= full;
    base &= full & ~free_mask;
    std::vector<VertexId> out;
    out.reserve(std::size_t{1} << std::popcount(free_mask));
    // enumerate the submasks of free_mask in increasing order of their
    // compressed binary index
    const int k = std::popcount(free_mask);
    for (std::uint32_t j = 0; j < (std::uint32_t{1} << k); ++j) {
        std::uint32_t idx = base;
        int bit = 0;
        for (int c = 0; c < dim_; ++c) {
            if (!(free_mask >> c & 1)) continue;
            if (j >> bit & 1) idx |= std::uint32_t{1} << c;
            ++bit;
        }
        out.push_back(vertices_[idx]);
    }
    Cube f;
    f.dim_ = k;
    f.vertices_ = std::move(out);
    return f;
}

std::vector<Cube> Cube::faces() const
{
    std::vector<Cube> out;
    const std::uint32_t full = (std::uint32_t{1} << dim_) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const std::uint32_t fixed = full & ~mask;
        // every assignment of the fixed coordinates
        for (std::uint32_t base = fixed;; base = (base - 1) & fixed) {
            out.push_back(face(mask, base));
            if (base == 0) break;
        }
    }
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Cube::edges() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (int c = 0; c < dim_; ++c) {
            const std::size_t j = i | (std::size_t{1} << c);
            if (j == i) continue;
            out.emplace_back(std::min(vertices_[i], vertices_[j]), std::max(vertices_[i], vertices_[j]));
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool Cube::has_face_on(std::span<const VertexId> subset) const
{
    if (subset.empty()) return false;
    std::uint32_t all = ~std::uint32_t{0}, any = 0;
    for (VertexId v : subset) {
        auto it = std::find(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end()) return false;
        const auto idx = static_cast<std::uint32_t>(it - vertices_.begin());
        all &= idx;
        any |= idx;
    }
    const std::uint32_t free_mask = any & ~all;
    return subset.size() == (std::size_t{1} << std::popcount(free_mask));
}

CubicalComplex CubicalComplex::from_maximal_cubes(std::vector<Cube> maximal)
{
    struct Entry {
        Cube cube;
        std::vector<std::pair<VertexId, VertexId>> edges;
        bool proper_face = false;
    };
    std::map<std::vector<VertexId>, Entry> by_set;
    for (const Cube& m : maximal) {
        const auto top = m.vertex_set();
        for (const Cube& f : m.faces()) {
            auto key = f.vertex_set();
            auto edges = f.edges();
            auto [it, fresh] = by_set.try_emplace(key, Entry{f, edges, false});
            if (!fresh && it->second.edges != edges) {
                throw InputError("cubes on vertex set " + set_string(key) + " have different edge structures");
            }
            if (key != top) it->second.proper_face = true;
        }
    }

    CubicalComplex Y;
    std::vector<std::pair<std::vector<VertexId>, Entry>> sorted(by_set.begin(), by_set.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    for (auto& [key, e] : sorted) {
        if (key.size() == 1) Y.vertices_.push_back(key[0]);
        Y.sets_.push_back(key);
        Y.cubes_.push_back(std::move(e.cube));
        Y.maximal_.push_back(e.proper_face ? 0 : 1);
    }
    Y.at_vertex_.resize(Y.vertices_.size());
    for (CubeId c = 0; c < Y.cubes_.size(); ++c)
        for (VertexId v : Y.sets_[c]) Y.at_vertex_[*Y.find_vertex(v)].push_back(c);

    // pairwise intersection axiom over maximal cubes meeting at a vertex
    std::set<std::pair<CubeId, CubeId>> seen;
    for (const auto& list : Y.at_vertex_) {
        for (std::size_t a = 0; a < list.size(); ++a) {
            if (!Y.maximal_[list[a]]) continue;
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                if (!Y.maximal_[list[b]] || !seen.emplace(list[a], list[b]).second) continue;
                const auto& A = Y.sets_[list[a]];
                const auto& B = Y.sets_[list[b]];
                std::vector<VertexId> common;
                std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(common));
                if (!Y.cubes_[list[a]].has_face_on(common) || !Y.cubes_[list[b]].has_face_on(common)) {
                    throw InputError("cubes " + set_string(A) + " and " + set_string(B) +
                                     " do not meet in a common face");
                }
            }
        }
    }
    return Y;
}

std::vector<CubeId> CubicalComplex::maximal_cubes() const
{
    std::vector<CubeId> out;
    for (CubeId c = 0; c < cubes_.size(); ++c)
        if (maximal_[c]) out.push_back(c);
    return out;
}

int CubicalComplex::dimension() const
{
    return cubes_.empty() ? -1 : cubes_.back().dim();
}

std::optional<CubeId> CubicalComplex::find(std::span<const VertexId> key) const
{
    if (key.empty()) return std::nullopt;
    auto v = find_vertex(key[0]);
    if (!v) return std::nullopt;
    for (CubeId c : at_vertex_[*v])
        if (std::equal(sets_[c].begin(), sets_[c].end(), key.begin(), key.end())) return c;
    return std::nullopt;
}

std::optional<CubeId> CubicalComplex::find(const Cube& c) const
{
    const auto key = c.vertex_set();
    auto id = find(key);
    if (id && cubes_[*id].edges() != c.edges()) return std::nullopt;
    return id;
}

std::optional<CubeId> CubicalComplex::find_vertex(VertexId v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<CubeId>(it - vertices_.begin());
}

std::span<const CubeId> CubicalComplex::cubes_at(VertexId v) const
{
    auto i = find_vertex(v);
    if (!i) return {};
    return at_vertex_[*i];
}

SimplicialComplex cube_link(const CubicalComplex& Y, CubeId k)
{
    if (k >= Y.cubes().size()) throw DomainError("cube id " + std::to_string(k) + " is not in the complex");
    const auto& S = Y.vertex_set(k);
    const int d = Y.cubes()[k].dim();
    auto contains = [&](CubeId c) {
        const auto& C = Y.vertex_set(c);
        return std::includes(C.begin(), C.end(), S.begin(), S.end());
    };
    std::vector<CubeId> minimal, tops;
    for (CubeId c : Y.cubes_at(S[0])) {
        if (c == k || !contains(c)) continue;
        if (Y.cubes()[c].dim() == d + 1) minimal.push_back(c);
        if (Y.is_maximal(c)) tops.push_back(c);
    }
    std::vector<std::vector<VertexId>> faces;
    for (CubeId t : tops) {
        const auto& T = Y.vertex_set(t);
        std::vector<VertexId> face;
        for (CubeId m : minimal) {
            const auto& M = Y.vertex_set(m);
            if (std::includes(T.begin(), T.end(), M.begin(), M.end())) face.push_back(static_cast<VertexId>(m));
        }
        faces.push_back(std::move(face));
    }
    return SimplicialComplex::from_maximal_faces(faces);
}

SimplicialComplex cube_link(const CubicalComplex& Y, const Cube& k)
{
    auto id = Y.find(k);
    if (!id) throw DomainError("cube " + set_string(k.vertex_set()) + " is not in the complex");
    return cube_link(Y, *id);
}

namespace {

template <class Check>
LinkVerdict vertex_links(const CubicalComplex& Y, Check check)
{
    for (VertexId v : Y.vertices()) {
        const auto L = cube_link(Y, *Y.find_vertex(v));
        CurvatureReport r = check(L);
        if (!r.verdict) {
            LinkVerdict out{false, v, std::nullopt};
            if (!r.witnesses.empty()) out.witness = std::move(r.witnesses.front());
            return out;
        }
    }
    return {};
}

}  // namespace

LinkVerdict is_locally_flag(const CubicalComplex& Y)
{
    return vertex_links(Y, [](const SimplicialComplex& L) { return check_flag(L, {1}); });
}

LinkVerdict is_locally_5_large(const CubicalComplex& Y)
{
    return vertex_links(Y, [](const SimplicialComplex& L) { return check_k_large(L, 5, {1}); });
}

LinkVerdict links_satisfy_sd2star(const CubicalComplex& Y)
{
    return vertex_links(Y, [](const SimplicialComplex& L) { return check_sd2star(L, {1}); });
}

SimplicialComplex thicken(const CubicalComplex& Y, std::size_t max_faces)
{
    std::vector<std::vector<VertexId>> faces;
    for (CubeId c : Y.maximal_cubes()) faces.push_back(Y.vertex_set(c));
    return SimplicialComplex::from_maximal_faces(faces, max_faces);
}

CurvatureReport verify_lemma26(const CubicalComplex& Y, Lemma26Hypothesis hypothesis, const CheckOptions& opt)
{
    auto fail = [](const LinkVerdict& lv, const std::string& what) {
        throw HypothesisError("hypothesis fails: link of vertex " + std::to_string(*lv.vertex) + " is not " + what,
                              *lv.vertex, lv.witness.value());
    };
    if (auto lv = links_satisfy_sd2star(Y); !lv.verdict) fail(lv, "SD2*");
    if (hypothesis == Lemma26Hypothesis::LinksSD2StarFiveLarge) {
        if (auto lv = is_locally_5_large(Y); !lv.verdict) fail(lv, "5-large");
    }
    return check_sd2star_links(thicken(Y), opt);
}

namespace cubical_catalog {

CubicalComplex single_cube(int d)
{
    if (d < 0 || d > kMaxCubeDim) throw DomainError("cube dimension out of range");
    std::vector<VertexId> v(std::size_t{1} << d);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<VertexId>(i);
    return CubicalComplex::from_maximal_cubes({Cube(std::move(v))});
}

CubicalComplex square_grid(int cols, int rows)
{
    if (cols < 1 || rows < 1) throw DomainError("grid needs at least one square");
    auto id = [&](int x, int y) { return static_cast<VertexId>(y * (cols + 1) + x); };
    std::vector<Cube> squares;
    for (int y = 0; y < rows; ++y)
        for (int x = 0; x < cols; ++x) squares.emplace_back(std::vector{id(x, y), id(x + 1, y), id(x, y + 1), id(x + 1, y + 1)});
    return CubicalComplex::from_maximal_cubes(std::move(squares));
}

CubicalComplex two_squares()
{
    return CubicalComplex::from_maximal_cubes({Cube({0, 1, 2, 3}), Cube({1, 3, 4, 5})});
}

}  // namespace cubical_catalog

}  // namespace curvlab
