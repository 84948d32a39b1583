#include "curvlab/curvature.hpp"

#include <algorithm>
#include <sstream>

#include "curvlab/errors.hpp"
#include "curvlab/graph.hpp"

namespace curvlab {

namespace {

// Rotate/reflect the rim so that the edge rim[e]-rim[e+1] comes first,
// picking the lexicographically smaller of the two orientations.
CycleSubcomplex orient_at_edge(const std::vector<VertexId>& rim, std::size_t e)
{
    const std::size_t k = rim.size();
    std::vector<VertexId> fwd, bwd;
    for (std::size_t i = 0; i < k; ++i) fwd.push_back(rim[(e + i) % k]);
    for (std::size_t i = 0; i < k; ++i) bwd.push_back(rim[(e + 1 + k - i) % k]);
    return CycleSubcomplex{std::min(fwd, bwd)};
}

// Wheel search inside one hub's neighbourhood. `pendant_ok(a, b, t)` decides
// whether {a, b, t} is a face; indices are in g.
template <typename Triangle>
void wheels_at_hub(const Graph& g, std::size_t hub, std::size_t k, bool with_pendant, Triangle pendant_ok,
                   std::vector<Wheel>& out, std::size_t limit)
{
    std::vector<std::size_t> old;
    const VertexSet& nb = g.neighbors(hub);
    for (auto i = nb.find_first(); i != VertexSet::npos; i = nb.find_next(i)) old.push_back(i);
    if (old.size() < k) return;
    Graph sub = g.induced(nb);
    for (const auto& c : induced_cycles(sub, k, k)) {
        std::vector<std::size_t> rim;
        for (auto i : c) rim.push_back(old[i]);
        if (!with_pendant) {
            out.push_back(Wheel{g.label(hub), CycleSubcomplex{g.to_labels(rim)}, std::nullopt});
            if (out.size() >= limit) return;
            continue;
        }
        VertexSet outside = g.full_set();
        outside.reset(hub);
        for (auto r : rim) outside.reset(r);
        for (std::size_t e = 0; e < k; ++e) {
            const std::size_t a = rim[e], b = rim[(e + 1) % k];
            VertexSet apex = g.neighbors(a) & g.neighbors(b) & outside;
            for (auto t = apex.find_first(); t != VertexSet::npos; t = apex.find_next(t)) {
                if (!pendant_ok(a, b, t)) continue;
                auto labels = g.to_labels(rim);
                Wheel w{g.label(hub), orient_at_edge(labels, e), g.label(t)};
                out.push_back(std::move(w));
                if (out.size() >= limit) return;
            }
        }
    }
}

std::vector<Wheel> graph_wheels(const Graph& g, std::size_t k, bool with_pendant, std::size_t limit)
{
    std::vector<Wheel> out;
    for (std::size_t h = 0; h < g.size() && out.size() < limit; ++h) {
        wheels_at_hub(g, h, k, with_pendant, [](std::size_t, std::size_t, std::size_t) { return true; }, out,
                      limit);
    }
    return out;
}

bool covered(const Graph& g, const Wheel& w)
{
    VertexSet common = g.full_set();
    for (VertexId v : w.vertex_set()) common &= g.closed_neighborhood(*g.index_of(v));
    return common.any();
}

// SD2* on the flag complex of g. Appends at most `budget` witnesses.
bool sd2star_graph(const Graph& g, const std::optional<Simplex>& link_of, std::size_t budget,
                   std::vector<Witness>& out)
{
    bool ok = true;
    auto room = [&] { return out.size() < budget; };
    for (const auto& w : graph_wheels(g, 4, false, budget)) {
        ok = false;
        if (!room()) break;
        out.push_back({link_of, FourWheel{w}});
    }
    if (!ok && !room()) return false;
    const auto pendant5 = graph_wheels(g, 5, true, static_cast<std::size_t>(-1));
    for (const auto& w : pendant5) {
        if (covered(g, w)) continue;
        ok = false;
        if (!room()) break;
        out.push_back({link_of, UncoveredPendantWheel{w}});
    }
    return ok;
}

// Link of sigma in the flag complex of g, as the induced graph on the
// common neighbours.
Graph flag_link(const Graph& g, const Simplex& sigma)
{
    VertexSet common = g.full_set();
    for (VertexId v : sigma.vertices()) common &= g.neighbors(*g.index_of(v));
    return g.induced(common);
}

std::optional<Witness> flag_witness(const SimplicialComplex& X)
{
    if (auto c = non_flag_witness(X)) return Witness{std::nullopt, NonFlagClique{*c}};
    return std::nullopt;
}

CurvatureReport failed_flag(Condition c, int k, Witness w)
{
    return CurvatureReport{c, k, false, {std::move(w)}};
}

bool wheel_valid(const SimplicialComplex& C, const Wheel& w, std::size_t k)
{
    if (w.k() != k || !C.has_vertex(w.hub)) return false;
    if (!is_cycle_in(C, w.rim, true)) return false;
    for (VertexId r : w.rim.vertices) {
        if (r == w.hub || !C.adjacent(w.hub, r)) return false;
    }
    if (w.pendant) {
        const VertexId t = *w.pendant;
        if (t == w.hub) return false;
        if (std::find(w.rim.vertices.begin(), w.rim.vertices.end(), t) != w.rim.vertices.end()) return false;
        if (!C.contains(Simplex::from_unordered({w.rim.vertices[0], w.rim.vertices[1], t}))) return false;
    }
    return true;
}

}  // namespace

std::vector<VertexId> Wheel::vertex_set() const
{
    std::vector<VertexId> v = rim.vertices;
    v.push_back(hub);
    if (pendant) v.push_back(*pendant);
    std::sort(v.begin(), v.end());
    return v;
}

std::string Wheel::to_string() const
{
    std::ostringstream os;
    os << '(' << hub << ';';
    for (std::size_t i = 0; i < rim.vertices.size(); ++i) os << (i ? "," : "") << rim.vertices[i];
    if (pendant) os << ';' << *pendant;
    os << ')';
    return os.str();
}

std::string condition_name(Condition c)
{
    switch (c) {
    case Condition::Flag: return "flag";
    case Condition::KLarge: return "k_large";
    case Condition::LocallyKLarge: return "locally_k_large";
    case Condition::SD2Star: return "sd2star";
    case Condition::SD2StarLinks: return "sd2star_links";
    case Condition::WeaklySystolicLocal: return "weakly_systolic_local";
    }
    return "unknown";
}

std::vector<Wheel> find_wheels(const SimplicialComplex& X, int k, bool with_pendant)
{
    if (k < 4) throw DomainError("find_wheels: k must be >= 4");
    Graph g(X);
    std::vector<Wheel> out;
    auto triangle = [&](std::size_t a, std::size_t b, std::size_t t) {
        return X.contains(Simplex::from_unordered({g.label(a), g.label(b), g.label(t)}));
    };
    for (std::size_t h = 0; h < g.size(); ++h) {
        wheels_at_hub(g, h, static_cast<std::size_t>(k), with_pendant, triangle, out,
                      static_cast<std::size_t>(-1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CurvatureReport check_flag(const SimplicialComplex& X, const CheckOptions&)
{
    if (auto w = flag_witness(X)) return failed_flag(Condition::Flag, 0, *w);
    return {Condition::Flag, 0, true, {}};
}

CurvatureReport check_k_large(const SimplicialComplex& X, int k, const CheckOptions& opt)
{
    if (k < 4) throw DomainError("k-largeness needs k >= 4");
    if (auto w = flag_witness(X)) return failed_flag(Condition::KLarge, k, *w);
    CurvatureReport r{Condition::KLarge, k, true, {}};
    if (k == 4) return r;
    Graph g(X);
    auto cycles = induced_cycles(g, 4, static_cast<std::size_t>(k - 1), std::max<std::size_t>(opt.max_witnesses, 1));
    for (const auto& c : cycles) r.witnesses.push_back({std::nullopt, ShortCycle{CycleSubcomplex{g.to_labels(c)}}});
    r.verdict = r.witnesses.empty();
    return r;
}

CurvatureReport check_sd2star(const SimplicialComplex& X, const CheckOptions& opt)
{
    if (auto w = flag_witness(X)) return failed_flag(Condition::SD2Star, 0, *w);
    CurvatureReport r{Condition::SD2Star, 0, true, {}};
    r.verdict = sd2star_graph(Graph(X), std::nullopt, std::max<std::size_t>(opt.max_witnesses, 1), r.witnesses);
    return r;
}

CurvatureReport check_sd2star_links(const SimplicialComplex& X, const CheckOptions& opt)
{
    if (auto w = flag_witness(X)) return failed_flag(Condition::SD2StarLinks, 0, *w);
    const std::size_t budget = std::max<std::size_t>(opt.max_witnesses, 1);
    CurvatureReport r{Condition::SD2StarLinks, 0, true, {}};
    Graph g(X);
    if (!sd2star_graph(g, std::nullopt, budget, r.witnesses)) r.verdict = false;
    for (const Simplex& s : X.faces()) {
        if (r.witnesses.size() >= budget) break;
        if (!sd2star_graph(flag_link(g, s), s, budget, r.witnesses)) r.verdict = false;
    }
    return r;
}

CurvatureReport is_locally_k_large(const SimplicialComplex& X, int k, const CheckOptions& opt)
{
    if (k < 4) throw DomainError("local k-largeness needs k >= 4");
    const std::size_t budget = std::max<std::size_t>(opt.max_witnesses, 1);
    CurvatureReport r{Condition::LocallyKLarge, k, true, {}};
    const bool flag = is_flag(X);
    Graph g(X);
    for (const Simplex& s : X.faces()) {
        if (r.witnesses.size() >= budget) break;
        if (flag) {
            if (k == 4) continue;
            Graph lg = flag_link(g, s);
            for (const auto& c : induced_cycles(lg, 4, static_cast<std::size_t>(k - 1), budget - r.witnesses.size()))
                r.witnesses.push_back({s, ShortCycle{CycleSubcomplex{lg.to_labels(c)}}});
        } else {
            SimplicialComplex L = link(X, s);
            if (auto c = non_flag_witness(L)) {
                r.witnesses.push_back({s, NonFlagClique{*c}});
                continue;
            }
            if (k == 4) continue;
            Graph lg(L);
            for (const auto& c : induced_cycles(lg, 4, static_cast<std::size_t>(k - 1), budget - r.witnesses.size()))
                r.witnesses.push_back({s, ShortCycle{CycleSubcomplex{lg.to_labels(c)}}});
        }
    }
    r.verdict = r.witnesses.empty();
    return r;
}

CurvatureReport check_weakly_systolic_local(const SimplicialComplex& X, const SystolicOptions& opt)
{
    if (!is_connected(X)) throw DomainError("weak systolicity check needs a connected complex");
    if (auto w = flag_witness(X)) return failed_flag(Condition::WeaklySystolicLocal, 0, *w);
    const std::size_t budget = std::max<std::size_t>(opt.max_witnesses, 1);
    CurvatureReport r{Condition::WeaklySystolicLocal, 0, true, {}};
    Graph g(X);

    std::vector<std::size_t> centers;
    if (opt.centers.empty()) {
        for (std::size_t i = 0; i < g.size(); ++i) centers.push_back(i);
    } else {
        for (VertexId v : opt.centers) {
            auto i = g.index_of(v);
            if (!i) throw DomainError("centre " + std::to_string(v) + " is not a vertex");
            centers.push_back(*i);
        }
    }

    for (std::size_t c : centers) {
        if (r.witnesses.size() >= budget) break;
        const auto dist = bfs_distances(g, c);
        const int ecc = *std::max_element(dist.begin(), dist.end());
        const int top = opt.max_radius < 0 ? ecc - 1 : std::min(opt.max_radius, ecc - 1);
        std::vector<VertexSet> layer(static_cast<std::size_t>(ecc + 1), g.empty_set());
        for (std::size_t i = 0; i < g.size(); ++i) layer[static_cast<std::size_t>(dist[i])].set(i);
        for (const Simplex& s : X.faces()) {
            if (r.witnesses.size() >= budget) break;
            const int d = dist[*g.index_of(s[0])];
            const int i = d - 1;
            if (i < 1 || i > top) continue;
            VertexSet common = layer[static_cast<std::size_t>(i)];
            bool same_sphere = true;
            for (VertexId v : s.vertices()) {
                const auto vi = *g.index_of(v);
                if (dist[vi] != d) { same_sphere = false; break; }
                common &= g.neighbors(vi);
            }
            if (!same_sphere) continue;
            if (common.any() && is_clique(g, common)) continue;
            // Literal intersection of face sets for the witness.
            std::vector<Simplex> inter;
            if (common.any()) {
                const Graph cg = g.induced(common);
                auto labels = cg.labels();
                SimplicialComplex C = clique_complex(labels, [&](VertexId a, VertexId b) {
                    return cg.adjacent(*cg.index_of(a), *cg.index_of(b));
                });
                inter = C.maximal_faces();
            }
            r.witnesses.push_back({std::nullopt, BallIntersection{g.label(c), i, s, std::move(inter)}});
        }
    }
    r.verdict = r.witnesses.empty();
    return r;
}

bool revalidate(const SimplicialComplex& X, const Witness& w)
{
    if (w.link_of && !X.contains(*w.link_of)) return false;
    const SimplicialComplex C = w.link_of ? link(X, *w.link_of) : X;
    return std::visit(
        [&](const auto& d) -> bool {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, NonFlagClique>) {
                const auto v = d.clique.vertices();
                for (std::size_t i = 0; i < v.size(); ++i)
                    for (std::size_t j = i + 1; j < v.size(); ++j)
                        if (!C.adjacent(v[i], v[j])) return false;
                return !C.contains(d.clique);
            } else if constexpr (std::is_same_v<T, ShortCycle>) {
                return d.cycle.length() >= 4 && is_cycle_in(C, d.cycle, true);
            } else if constexpr (std::is_same_v<T, FourWheel>) {
                return !d.wheel.pendant && wheel_valid(C, d.wheel, 4);
            } else if constexpr (std::is_same_v<T, UncoveredPendantWheel>) {
                if (!d.wheel.pendant || !wheel_valid(C, d.wheel, 5)) return false;
                const auto ws = d.wheel.vertex_set();
                for (VertexId v : C.vertices()) {
                    SimplicialComplex b = ball(C, v, 1);
                    if (std::all_of(ws.begin(), ws.end(), [&](VertexId x) { return b.has_vertex(x); }))
                        return false;
                }
                return true;
            } else {
                if (w.link_of || d.radius < 1 || !C.contains(d.sigma) || !C.has_vertex(d.center)) return false;
                for (VertexId v : d.sigma.vertices()) {
                    if (graph_distance(C, d.center, v) != ExtendedInt(d.radius + 1)) return false;
                }
                const SimplicialComplex L = link(C, d.sigma);
                const SimplicialComplex B = ball(C, d.center, d.radius);
                std::vector<Simplex> faces;
                for (const Simplex& f : L.faces())
                    if (B.contains(f)) faces.push_back(f);
                const SimplicialComplex I = SimplicialComplex::from_closed_faces_unchecked(faces);
                const auto maximal = I.maximal_faces();
                if (maximal != d.intersection) return false;
                return maximal.size() != 1;
            }
        },
        w.detail);
}

Prop29Outcome crosscheck_prop29(const SimplicialComplex& X, std::size_t vertex_bound)
{
    const std::size_t n = X.vertex_count();
    if (n > vertex_bound || n >= 63) {
        throw ResourceError("full-subcomplex cross-check enumerates 2^" + std::to_string(n) +
                            " subsets; bound is " + std::to_string(vertex_bound) + " vertices");
    }
    Prop29Outcome out;
    out.links_side = check_sd2star_links(X, {1}).verdict;
    if (!is_flag(X)) {
        out.subcomplexes_side = false;  // X is a full subcomplex of itself
        return out;
    }
    const Graph g(X);
    out.subcomplexes_side = true;
    std::vector<Witness> scratch;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet keep(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) keep.set(i);
        scratch.clear();
        if (!sd2star_graph(g.induced(keep), std::nullopt, 1, scratch)) {
            out.subcomplexes_side = false;
            break;
        }
    }
    return out;
}

}  // namespace curvlab
