#include "curvlab/ripslab.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <functional>

#include "curvlab/errors.hpp"

namespace curvlab {

namespace {

template <class T>
bool triangle_holds(const std::vector<std::vector<T>>& d)
{
    const std::size_t n = d.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (d[i][j] > d[i][k] + d[k][j]) return false;
    return true;
}

bool compute_triangle(const std::vector<std::vector<mpq_class>>& dist)
{
    // integer matrices, the common case, avoid rational arithmetic
    std::vector<std::vector<long>> small(dist.size(), std::vector<long>(dist.size()));
    for (std::size_t i = 0; i < dist.size(); ++i)
        for (std::size_t j = 0; j < dist.size(); ++j) {
            const mpq_class& q = dist[i][j];
            if (q.get_den() != 1 || !q.get_num().fits_slong_p() || q.get_num() > LONG_MAX / 4) {
                return triangle_holds(dist);
            }
            small[i][j] = q.get_num().get_si();
        }
    return triangle_holds(small);
}

std::vector<VertexId> sorted_unique(std::span<const VertexId> v)
{
    std::vector<VertexId> out(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int parse_int(const std::string& s, const std::string& spec)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 1) {
        throw InputError("bad generator parameter in '" + spec + "'");
    }
    return v;
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<VertexId> points, std::vector<std::vector<mpq_class>> dist)
{
    const std::size_t n = points.size();
    if (dist.size() != n) throw InputError("distance matrix has " + std::to_string(dist.size()) + " rows for " +
                                           std::to_string(n) + " points");
    for (const auto& row : dist)
        if (row.size() != n) throw InputError("distance matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i][i] != 0) throw InputError("nonzero distance from point " + std::to_string(points[i]) + " to itself");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i][j] != dist[j][i]) throw InputError("distance matrix is not symmetric");
            if (dist[i][j] <= 0) {
                throw InputError("distance between distinct points " + std::to_string(points[i]) + " and " +
                                 std::to_string(points[j]) + " must be positive");
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (points[order[i]] == points[order[i + 1]]) {
            throw InputError("repeated point id " + std::to_string(points[order[i]]));
        }
    points_.resize(n);
    dist_.assign(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        points_[i] = points[order[i]];
        for (std::size_t j = 0; j < n; ++j) dist_[i][j] = dist[order[i]][order[j]];
    }
    triangle_ = compute_triangle(dist_);
}

std::size_t FiniteMetricSpace::index_of(VertexId p) const
{
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) throw InputError("unknown point " + std::to_string(p));
    return static_cast<std::size_t>(it - points_.begin());
}

bool FiniteMetricSpace::contains(VertexId p) const
{
    return std::binary_search(points_.begin(), points_.end(), p);
}

const mpq_class& FiniteMetricSpace::distance(VertexId p, VertexId q) const
{
    return dist_[index_of(p)][index_of(q)];
}

mpq_class FiniteMetricSpace::diameter() const
{
    mpq_class best = 0;
    for (const auto& row : dist_)
        for (const auto& v : row) best = std::max(best, v);
    return best;
}

FiniteMetricSpace FiniteMetricSpace::restrict(std::span<const VertexId> subset) const
{
    const auto keep = sorted_unique(subset);
    std::vector<std::size_t> idx;
    for (VertexId p : keep) idx.push_back(index_of(p));
    std::vector<std::vector<mpq_class>> d(keep.size(), std::vector<mpq_class>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) d[i][j] = dist_[idx[i]][idx[j]];
    return FiniteMetricSpace(keep, std::move(d));
}

std::vector<VertexId> FiniteMetricSpace::neighbourhood(std::span<const VertexId> centres, const mpq_class& r) const
{
    std::vector<std::size_t> c;
    for (VertexId p : centres) c.push_back(index_of(p));
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (std::any_of(c.begin(), c.end(), [&](std::size_t j) { return dist_[i][j] <= r; })) {
            out.push_back(points_[i]);
        }
    return out;
}

FiniteMetricSpace graph_metric(const SimplicialComplex& X)
{
    const auto V = X.vertices();
    std::vector<std::vector<mpq_class>> d(V.size(), std::vector<mpq_class>(V.size()));
    for (std::size_t i = 0; i < V.size(); ++i) {
        const auto row = distances_from(X, V[i]);
        for (std::size_t j = 0; j < V.size(); ++j) {
            if (row[j] < 0) throw DomainError("graph metric needs a connected complex");
            d[i][j] = row[j];
        }
    }
    return FiniteMetricSpace({V.begin(), V.end()}, std::move(d));
}

namespace metric_gen {

namespace {

FiniteMetricSpace from_function(std::size_t n, const std::function<mpq_class(std::size_t, std::size_t)>& f)
{
    std::vector<VertexId> pts(n);
    std::vector<std::vector<mpq_class>> d(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = static_cast<VertexId>(i);
        for (std::size_t j = 0; j < n; ++j) d[i][j] = f(i, j);
    }
    return FiniteMetricSpace(std::move(pts), std::move(d));
}

}  // namespace

FiniteMetricSpace cycle(int n)
{
    if (n < 3) throw DomainError("cycle metric needs at least 3 points");
    const auto m = static_cast<std::size_t>(n);
    return from_function(m, [m](std::size_t i, std::size_t j) {
        const std::size_t a = i > j ? i - j : j - i;
        return mpq_class(static_cast<long>(std::min(a, m - a)));
    });
}

FiniteMetricSpace path(int n, const mpq_class& spacing)
{
    if (n < 1) throw DomainError("path metric needs at least 1 point");
    if (spacing <= 0) throw DomainError("path spacing must be positive");
    return from_function(static_cast<std::size_t>(n), [&](std::size_t i, std::size_t j) {
        return spacing * static_cast<long>(i > j ? i - j : j - i);
    });
}

FiniteMetricSpace star(int leaves)
{
    if (leaves < 1) throw DomainError("star metric needs at least 1 leaf");
    return from_function(static_cast<std::size_t>(leaves) + 1, [](std::size_t i, std::size_t j) {
        if (i == j) return mpq_class(0);
        return mpq_class(i == 0 || j == 0 ? 1 : 2);
    });
}

FiniteMetricSpace grid(int cols, int rows, GridMetric metric)
{
    if (cols < 1 || rows < 1) throw DomainError("grid metric needs positive dimensions");
    const auto w = static_cast<long>(cols);
    return from_function(static_cast<std::size_t>(cols * rows), [w, metric](std::size_t i, std::size_t j) {
        const long dx = std::labs(static_cast<long>(i) % w - static_cast<long>(j) % w);
        const long dy = std::labs(static_cast<long>(i) / w - static_cast<long>(j) / w);
        return mpq_class(metric == GridMetric::L1 ? dx + dy : std::max(dx, dy));
    });
}

FiniteMetricSpace binary_tree(int depth)
{
    if (depth < 0 || depth > 12) throw DomainError("binary tree depth out of range");
    const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
    auto level = [](std::size_t v) {
        int l = 0;
        while (v > 0) {
            v = (v - 1) / 2;
            ++l;
        }
        return l;
    };
    return from_function(n, [&](std::size_t a, std::size_t b) {
        long steps = 0;
        while (a != b) {
            if (level(a) >= level(b)) a = (a - 1) / 2;
            else b = (b - 1) / 2;
            ++steps;
        }
        return mpq_class(steps);
    });
}

FiniteMetricSpace parse(const std::string& spec)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t p = spec.find(':'); p != std::string::npos; p = spec.find(':', start)) {
        parts.push_back(spec.substr(start, p - start));
        start = p + 1;
    }
    parts.push_back(spec.substr(start));
    const std::string& kind = parts[0];
    if (parts.size() == 2 && kind == "cycle") return cycle(parse_int(parts[1], spec));
    if (parts.size() == 2 && kind == "path") return path(parse_int(parts[1], spec));
    if (parts.size() == 2 && kind == "star") return star(parse_int(parts[1], spec));
    if (parts.size() == 2 && kind == "btree") return binary_tree(parse_int(parts[1], spec));
    if ((parts.size() == 2 || parts.size() == 3) && kind == "grid") {
        const auto x = parts[1].find('x');
        if (x == std::string::npos) throw InputError("grid generator needs WxH in '" + spec + "'");
        GridMetric m = GridMetric::L1;
        if (parts.size() == 3) {
            if (parts[2] == "linf") m = GridMetric::LInf;
            else if (parts[2] != "l1") throw InputError("unknown grid metric in '" + spec + "'");
        }
        return grid(parse_int(parts[1].substr(0, x), spec), parse_int(parts[1].substr(x + 1), spec), m);
    }
    throw InputError("unknown metric generator '" + spec + "'");
}

}  // namespace metric_gen

DiameterFunction DiameterFunction::from_metric(FiniteMetricSpace M)
{
    DiameterFunction nu;
    nu.points_.assign(M.points().begin(), M.points().end());
    nu.metric_ = std::move(M);
    return nu;
}

DiameterFunction DiameterFunction::from_table(std::vector<VertexId> points, std::map<Simplex, mpq_class> table)
{
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) throw InputError("repeated point id");
    for (const auto& [s, v] : table) {
        for (VertexId p : s.vertices())
            if (!std::binary_search(points.begin(), points.end(), p)) {
                throw InputError("diameter table names unknown point " + std::to_string(p));
            }
        if (v < 0) throw InputError("negative diameter on " + s.to_string());
        if (s.size() == 1 && v != 0) throw InputError("diameter of a point must be 0: " + s.to_string());
        if (s.size() < 3) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto it = table.find(s.without_index(i));
            if (it == table.end() || it->second > v) {
                throw InputError("diameter table is not monotone at " + s.to_string());
            }
        }
    }
    DiameterFunction nu;
    nu.points_ = std::move(points);
    nu.table_ = std::move(table);
    return nu;
}

std::span<const VertexId> DiameterFunction::points() const
{
    return points_;
}

std::optional<mpq_class> DiameterFunction::operator()(const Simplex& s) const
{
    if (metric_) {
        mpq_class best = 0;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b) best = std::max(best, metric_->distance(s[a], s[b]));
        return best;
    }
    if (s.size() == 1 && std::binary_search(points_.begin(), points_.end(), s[0])) return mpq_class(0);
    auto it = table_.find(s);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

SimplicialComplex rips(const FiniteMetricSpace& M, const mpq_class& r, int max_dim, std::size_t max_faces)
{
    return clique_complex(
        M.points(), [&](VertexId a, VertexId b) { return M.distance(a, b) <= r; }, max_dim, max_faces);
}

SimplicialComplex vietoris(const DiameterFunction& nu, const mpq_class& eps, int max_dim, std::size_t max_faces)
{
    if (nu.is_metric()) {
        // nu_d(s) <= eps iff all pairs are within eps
        std::vector<VertexId> pts(nu.points().begin(), nu.points().end());
        return clique_complex(
            pts, [&](VertexId a, VertexId b) { return *nu(Simplex::from_unordered({a, b})) <= eps; }, max_dim,
            max_faces);
    }
    std::vector<Simplex> faces;
    for (VertexId p : nu.points()) faces.push_back(Simplex({p}));
    for (const auto& [s, v] : nu.table())
        if (s.size() > 1 && v <= eps && (max_dim < 0 || s.dim() <= max_dim)) faces.push_back(s);
    if (faces.size() > max_faces) throw ResourceError("Vietoris complex exceeds the face cap");
    std::sort(faces.begin(), faces.end());
    return SimplicialComplex::from_faces(std::move(faces));
}

ScalePair::ScalePair(mpq_class r_, mpq_class R_) : r(std::move(r_)), R(std::move(R_))
{
    if (r < 0 || R < r) throw DomainError("scales need 0 <= r <= R");
}

namespace {

ProbeResult probe(const SimplicialComplex& source, const SimplicialComplex& target, int i)
{
    ProbeResult out;
    out.map.degree = i;
    if (source.empty()) return out;
    out.map = inclusion_map(source, target, i);
    out.verdict = out.map.is_zero();
    if (!out.verdict) {
        const RationalHomology hs(source, i);
        for (std::size_t j = 0; j < out.map.source_rank && !out.surviving; ++j)
            for (std::size_t t = 0; t < out.map.target_rank; ++t)
                if (out.map.matrix[t][j] != 0) {
                    out.surviving = hs.representative(j);
                    break;
                }
    }
    return out;
}

}  // namespace

ProbeResult homological_asphericity_probe(const FiniteMetricSpace& M, std::span<const VertexId> A, int i,
                                          const ScalePair& s, std::size_t max_faces)
{
    if (i < 1) throw DomainError("asphericity probe needs degree >= 1");
    const auto MA = M.restrict(A);
    return probe(rips(MA, s.r, i + 1, max_faces), rips(MA, s.R, i + 1, max_faces), i);
}

ProbeResult complement_probe(const FiniteMetricSpace& M, std::span<const VertexId> K, std::span<const VertexId> L,
                             int i, const ScalePair& s, std::size_t max_faces)
{
    if (i < 1) throw DomainError("complement probe needs degree >= 1");
    const auto k = sorted_unique(K), l = sorted_unique(L);
    for (VertexId p : l) M.index_of(p);
    if (!std::includes(l.begin(), l.end(), k.begin(), k.end())) throw DomainError("complement probe needs K inside L");
    std::vector<VertexId> outside_l, outside_k;
    for (VertexId p : M.points()) {
        if (!std::binary_search(l.begin(), l.end(), p)) outside_l.push_back(p);
        if (!std::binary_search(k.begin(), k.end(), p)) outside_k.push_back(p);
    }
    return probe(rips(M.restrict(outside_l), s.r, i + 1, max_faces),
                 rips(M.restrict(outside_k), s.R, i + 1, max_faces), i);
}

FiltrationLadder filtration_maps(const FiniteMetricSpace& M, std::span<const mpq_class> radii, int i, bool reduced,
                                 std::size_t max_faces)
{
    if (i < 0) throw DomainError("homology degree must be >= 0");
    for (std::size_t a = 0; a < radii.size(); ++a) {
        if (radii[a] < 0) throw DomainError("radii must be nonnegative");
        if (a > 0 && radii[a] <= radii[a - 1]) throw DomainError("radii must be strictly ascending");
    }
    FiltrationLadder out;
    out.degree = i;
    out.radii.assign(radii.begin(), radii.end());
    std::vector<SimplicialComplex> levels;
    for (const auto& r : radii) {
        levels.push_back(rips(M, r, i + 1, max_faces));
        out.ranks.push_back(levels.back().empty() ? 0 : RationalHomology(levels.back(), i, reduced).rank());
    }
    for (std::size_t a = 0; a + 1 < levels.size(); ++a) {
        if (levels[a].empty()) {
            InducedMap m;
            m.degree = i;
            m.target_rank = out.ranks[a + 1];
            out.maps.push_back(m);
        } else {
            out.maps.push_back(inclusion_map(levels[a], levels[a + 1], i, reduced));
        }
    }
    out.death.resize(levels.size());
    for (std::size_t a = 0; a < levels.size(); ++a) {
        out.death[a].assign(out.ranks[a], std::nullopt);
        for (std::size_t j = 0; j < out.ranks[a]; ++j) {
            std::vector<mpq_class> v(out.ranks[a], mpq_class(0));
            v[j] = 1;
            for (std::size_t b = a + 1; b < levels.size(); ++b) {
                const auto& m = out.maps[b - 1].matrix;
                std::vector<mpq_class> w(out.ranks[b], mpq_class(0));
                for (std::size_t t = 0; t < w.size(); ++t)
                    for (std::size_t c = 0; c < v.size(); ++c) w[t] += m[t][c] * v[c];
                v = std::move(w);
                if (std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; })) {
                    out.death[a][j] = out.radii[b];
                    break;
                }
            }
        }
    }
    return out;
}

std::map<Simplex, long> loop_chain(const CycleSubcomplex& loop)
{
    std::map<Simplex, long> chain;
    const std::size_t n = loop.length();
    for (std::size_t a = 0; a < n; ++a) {
        const VertexId u = loop.vertices[a], v = loop.vertices[(a + 1) % n];
        chain[Simplex::from_unordered({u, v})] += u < v ? 1 : -1;
    }
    return chain;
}

ExtendedInt filling_radius_estimate(const SimplicialComplex& X, const CycleSubcomplex& loop)
{
    if (loop.length() < 3 || !is_cycle_in(X, loop, false)) throw DomainError("loop is not a cycle of the complex");
    const auto V = X.vertices();
    std::vector<int> dist(V.size(), -1);
    for (VertexId c : loop.vertices) {
        const auto d = distances_from(X, c);
        for (std::size_t j = 0; j < V.size(); ++j)
            if (d[j] >= 0 && (dist[j] < 0 || d[j] < dist[j])) dist[j] = d[j];
    }
    const int reach = *std::max_element(dist.begin(), dist.end());
    const auto chain = loop_chain(loop);
    for (int k = 0; k <= reach; ++k) {
        std::vector<VertexId> within;
        bool grew = k == 0;
        for (std::size_t j = 0; j < V.size(); ++j) {
            if (dist[j] >= 0 && dist[j] <= k) within.push_back(V[j]);
            if (dist[j] == k) grew = true;
        }
        if (!grew) continue;
        if (bounds_over_Z(span(X, within), 1, chain)) return ExtendedInt(k);
    }
    return ExtendedInt::infinite();
}

}  // namespace curvlab
