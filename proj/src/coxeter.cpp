#include "curvlab/coxeter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "curvlab/homology.hpp"

namespace curvlab {

namespace {

bool shortlex_less(const Word& a, const Word& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// w * s for w reduced: cancel s against its last occurrence if everything
// after that occurrence commutes with s.
void append_reduce(const CoxeterSystem& W, Word& w, std::uint32_t s)
{
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] == s) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            return;
        }
        if (!W.commute(w[i], s)) break;
    }
    w.push_back(s);
}

// Least word in the commutation class of a reduced word: repeatedly move
// the smallest available letter to the front.
Word lex_least(const CoxeterSystem& W, Word w)
{
    Word out;
    out.reserve(w.size());
    while (!w.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < w.size(); ++i) {
            if (w[i] >= w[best]) continue;
            bool free = true;
            for (std::size_t j = 0; j < i && free; ++j) free = W.commute(w[j], w[i]);
            if (free) best = i;
        }
        out.push_back(w[best]);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

// Products of the subsets of a clique, in binary order of the subset.
std::vector<Word> clique_elements(const std::vector<std::uint32_t>& T)
{
    std::vector<Word> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << T.size()); ++mask) {
        Word u;
        for (std::size_t j = 0; j < T.size(); ++j)
            if (mask >> j & 1) u.push_back(T[j]);
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace

CoxeterSystem::CoxeterSystem(SimplicialComplex nerve) : nerve_(std::move(nerve))
{
    if (nerve_.empty()) throw DomainError("nerve must have at least one vertex");
    if (auto w = non_flag_witness(nerve_)) {
        throw DomainError("nerve is not flag: " + w->to_string() + " is an unfilled clique");
    }
    gens_.assign(nerve_.vertices().begin(), nerve_.vertices().end());
    const std::size_t n = gens_.size();
    commute_.assign(n * n, 0);
    for (std::uint32_t s = 0; s < n; ++s)
        for (std::uint32_t t = 0; t < n; ++t)
            if (s != t && nerve_.adjacent(gens_[s], gens_[t])) commute_[s * n + t] = 1;
    for (const Simplex& f : nerve_.faces()) {
        std::vector<std::uint32_t> c;
        for (VertexId v : f.vertices()) c.push_back(index_of(v));
        cliques_.push_back(std::move(c));
    }
    for (const Simplex& f : nerve_.maximal_faces()) {
        std::vector<std::uint32_t> c;
        for (VertexId v : f.vertices()) c.push_back(index_of(v));
        maximal_.push_back(std::move(c));
    }
}

std::uint32_t CoxeterSystem::index_of(VertexId s) const
{
    auto it = std::lower_bound(gens_.begin(), gens_.end(), s);
    if (it == gens_.end() || *it != s) throw InputError("unknown generator " + std::to_string(s));
    return static_cast<std::uint32_t>(it - gens_.begin());
}

std::size_t CoxeterSystem::max_clique_size() const
{
    std::size_t best = 0;
    for (const auto& c : maximal_) best = std::max(best, c.size());
    return best;
}

std::string CoxeterSystem::format(const Word& w) const
{
    std::string out;
    if (gens_.size() <= 26) {
        for (auto s : w) out.push_back(static_cast<char>('a' + s));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back('.');
        out += std::to_string(gens_[w[i]]);
    }
    return out;
}

Word CoxeterSystem::parse(const std::string& s) const
{
    Word w;
    if (s.empty()) return w;
    const bool ids = s.find_first_of("0123456789") != std::string::npos;
    if (!ids) {
        for (char ch : s) {
            if (ch < 'a' || ch > 'z' || static_cast<std::size_t>(ch - 'a') >= gens_.size() || gens_.size() > 26) {
                throw InputError(std::string("unknown letter '") + ch + "'");
            }
            w.push_back(static_cast<std::uint32_t>(ch - 'a'));
        }
        return w;
    }
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t dot = std::min(s.find('.', start), s.size());
        const std::string tok = s.substr(start, dot - start);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw InputError("bad generator id '" + tok + "'");
        }
        if (used != tok.size()) throw InputError("bad generator id '" + tok + "'");
        w.push_back(index_of(static_cast<VertexId>(v)));
        start = dot + 1;
    }
    return w;
}

Word normal_form(const CoxeterSystem& W, const Word& w)
{
    Word r;
    for (auto s : w) {
        if (s >= W.rank()) throw InputError("letter " + std::to_string(s) + " is not a generator");
        append_reduce(W, r, s);
    }
    return lex_least(W, std::move(r));
}

Word multiply_generator(const CoxeterSystem& W, const Word& w, std::uint32_t s)
{
    Word r = w;
    append_reduce(W, r, s);
    return lex_least(W, std::move(r));
}

Word inverse(const Word& w)
{
    return Word(w.rbegin(), w.rend());
}

Word concat(const Word& a, const Word& b)
{
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::optional<std::size_t> CayleyBall::find(const Word& w) const
{
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

CayleyBall cayley_ball(const CoxeterSystem& W, int radius, std::size_t cap)
{
    if (radius < 0) throw DomainError("ball radius must be >= 0");
    CayleyBall B;
    B.radius = radius;
    B.elements.push_back({});
    B.index_.emplace(Word{}, 0);
    std::size_t layer_begin = 0;
    for (int r = 0; r < radius; ++r) {
        const std::size_t layer_end = B.elements.size();
        std::set<Word> next;
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (std::uint32_t s = 0; s < W.rank(); ++s) {
                Word v = multiply_generator(W, B.elements[i], s);
                if (v.size() > B.elements[i].size()) next.insert(std::move(v));
            }
        if (B.elements.size() + next.size() > cap) {
            throw ResourceError("Cayley ball exceeds " + std::to_string(cap) + " elements");
        }
        for (const Word& v : next) {
            B.index_.emplace(v, B.elements.size());
            B.elements.push_back(v);
        }
        layer_begin = layer_end;
    }
    for (std::size_t i = 0; i < B.elements.size(); ++i) {
        if (static_cast<int>(B.elements[i].size()) >= radius) break;
        for (std::uint32_t s = 0; s < W.rank(); ++s) {
            const Word v = multiply_generator(W, B.elements[i], s);
            if (v.size() > B.elements[i].size()) B.edges.push_back({i, B.index_.at(v), s});
        }
    }
    return B;
}

DavisBall davis_ball(const CoxeterSystem& W, int radius, std::size_t cap)
{
    if (radius < 0) throw DomainError("ball radius must be >= 0");
    const int c = static_cast<int>(W.max_clique_size());
    const CayleyBall big = cayley_ball(W, radius + c, cap);

    // one cube per coset wW_T with w its shortest element
    std::vector<std::vector<std::size_t>> cubes;
    for (std::size_t i = 0; i < big.elements.size(); ++i) {
        const Word& w = big.elements[i];
        if (static_cast<int>(w.size()) > radius) break;
        for (const auto& T : W.maximal_cliques()) {
            bool shortest = true;
            for (auto t : T) shortest = shortest && multiply_generator(W, w, t).size() > w.size();
            if (!shortest) continue;
            std::vector<std::size_t> cube;
            for (const Word& u : clique_elements(T)) cube.push_back(*big.find(normal_form(W, concat(w, u))));
            cubes.push_back(std::move(cube));
        }
    }
    std::vector<std::size_t> used;
    for (const auto& cube : cubes) used.insert(used.end(), cube.begin(), cube.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    auto renumber = [&](std::size_t i) {
        return static_cast<VertexId>(std::lower_bound(used.begin(), used.end(), i) - used.begin());
    };

    DavisBall D;
    D.radius = radius;
    for (std::size_t i : used) D.elements.push_back(big.elements[i]);
    std::vector<Cube> list;
    for (const auto& cube : cubes) {
        std::vector<VertexId> v;
        for (std::size_t i : cube) v.push_back(renumber(i));
        list.emplace_back(std::move(v));
    }
    D.complex = CubicalComplex::from_maximal_cubes(std::move(list));
    D.identity = 0;

    // links at elements of length <= radius must be the nerve, with the
    // edge {w, ws} standing for s
    std::map<Word, VertexId> id_of;
    for (std::size_t v = 0; v < D.elements.size(); ++v) id_of.emplace(D.elements[v], static_cast<VertexId>(v));
    std::set<std::vector<std::uint32_t>> nerve_faces(W.cliques().begin(), W.cliques().end());
    for (std::size_t v = 0; v < D.elements.size(); ++v) {
        const Word& w = D.elements[v];
        if (static_cast<int>(w.size()) > radius) continue;
        std::map<VertexId, std::uint32_t> gen_of;  // neighbour -> generator
        for (std::uint32_t s = 0; s < W.rank(); ++s) gen_of[id_of.at(multiply_generator(W, w, s))] = s;
        const auto L = cube_link(D.complex, *D.complex.find_vertex(static_cast<VertexId>(v)));
        bool ok = L.vertex_count() == W.rank() && L.face_count() == nerve_faces.size();
        for (const Simplex& f : L.faces()) {
            if (!ok) break;
            std::vector<std::uint32_t> img;
            for (VertexId e : f.vertices()) {
                const auto& ends = D.complex.vertex_set(static_cast<CubeId>(e));
                img.push_back(gen_of.at(ends[0] == static_cast<VertexId>(v) ? ends[1] : ends[0]));
            }
            std::sort(img.begin(), img.end());
            ok = nerve_faces.count(img) > 0;
        }
        if (!ok) throw std::logic_error("Davis ball link at " + W.format(w) + " is not the nerve");
    }
    return D;
}

FiniteQuotientMap FiniteQuotientMap::from_table(const CoxeterSystem& W,
                                                const std::vector<std::vector<std::int64_t>>& table,
                                                const std::vector<std::int64_t>& gen_images)
{
    const std::size_t n = table.size();
    if (n == 0) throw InputError("multiplication table is empty");
    for (const auto& row : table) {
        if (row.size() != n) throw InputError("multiplication table is not square");
        std::vector<char> hit(n, 0);
        for (auto v : row) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)]) {
                throw InputError("multiplication table is not a Latin square");
            }
            hit[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<char> hit(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = static_cast<std::size_t>(table[i][j]);
            if (hit[v]) throw InputError("multiplication table is not a Latin square");
            hit[v] = 1;
        }
    }
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < n && !e; ++i) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = table[i][x] == static_cast<std::int64_t>(x) && table[x][i] == static_cast<std::int64_t>(x);
        if (ok) e = i;
    }
    if (!e) throw InputError("multiplication table has no identity");
    if (gen_images.size() != W.rank()) {
        throw InputError("expected " + std::to_string(W.rank()) + " generator images, got " +
                         std::to_string(gen_images.size()));
    }
    for (auto g : gen_images)
        if (g < 0 || static_cast<std::size_t>(g) >= n) throw InputError("generator image out of range");

    // the subgroup generated by the images, identity first
    std::vector<std::size_t> elems{*e};
    std::vector<long> pos(n, -1);
    pos[*e] = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto g : gen_images) {
            const auto y = static_cast<std::size_t>(table[elems[i]][static_cast<std::size_t>(g)]);
            if (pos[y] < 0) {
                pos[y] = static_cast<long>(elems.size());
                elems.push_back(y);
            }
        }
    // associativity on the subgroup, by Light's test over its generators
    for (auto g : gen_images)
        for (std::size_t x : elems)
            for (std::size_t y : elems) {
                const auto gz = static_cast<std::size_t>(g);
                const auto lhs = table[static_cast<std::size_t>(table[x][y])][gz];
                const auto rhs = table[x][static_cast<std::size_t>(table[y][gz])];
                if (lhs != rhs) throw InputError("multiplication table is not associative");
            }
    FiniteQuotientMap phi;
    phi.right_.assign(W.rank(), std::vector<std::uint32_t>(elems.size()));
    for (std::uint32_t s = 0; s < W.rank(); ++s)
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const auto y = static_cast<std::size_t>(table[elems[i]][static_cast<std::size_t>(gen_images[s])]);
            phi.right_[s][i] = static_cast<std::uint32_t>(pos[y]);
        }
    phi.check_relations(W);
    return phi;
}

FiniteQuotientMap FiniteQuotientMap::from_permutations(const CoxeterSystem& W,
                                                       const std::vector<std::vector<std::int64_t>>& perms,
                                                       std::size_t cap)
{
    if (perms.size() != W.rank()) {
        throw InputError("expected " + std::to_string(W.rank()) + " generator permutations, got " +
                         std::to_string(perms.size()));
    }
    const std::size_t n = perms.empty() ? 0 : perms[0].size();
    std::vector<std::vector<std::uint32_t>> gens;
    for (const auto& p : perms) {
        if (p.size() != n) throw InputError("generator permutations have different degrees");
        std::vector<char> hit(n, 0);
        std::vector<std::uint32_t> g;
        for (auto v : p) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)]) {
                throw InputError("generator image is not a permutation");
            }
            hit[static_cast<std::size_t>(v)] = 1;
            g.push_back(static_cast<std::uint32_t>(v));
        }
        gens.push_back(std::move(g));
    }
    std::vector<std::vector<std::uint32_t>> elems;
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    std::vector<std::uint32_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
    elems.push_back(id);
    index.emplace(id, 0);
    FiniteQuotientMap phi;
    phi.right_.assign(W.rank(), {});
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::uint32_t s = 0; s < W.rank(); ++s) {
            std::vector<std::uint32_t> y(n);
            for (std::size_t p = 0; p < n; ++p) y[p] = gens[s][elems[i][p]];
            auto [it, fresh] = index.emplace(y, static_cast<std::uint32_t>(elems.size()));
            if (fresh) {
                if (elems.size() >= cap) throw ResourceError("permutation group exceeds the size cap");
                elems.push_back(std::move(y));
            }
            phi.right_[s].push_back(it->second);
        }
    phi.check_relations(W);
    return phi;
}

void FiniteQuotientMap::check_relations(const CoxeterSystem& W) const
{
    for (std::uint32_t s = 0; s < W.rank(); ++s) {
        const std::size_t g = right(0, s);
        if (g == 0) throw DomainError("generator " + W.format({s}) + " maps to the identity");
        if (right(g, s) != 0) throw DomainError("image of generator " + W.format({s}) + " is not an involution");
        for (std::uint32_t t = s + 1; t < W.rank(); ++t)
            if (W.commute(s, t) && right(right(0, s), t) != right(right(0, t), s)) {
                throw DomainError("images of commuting generators " + W.format({s}) + ", " + W.format({t}) +
                                  " do not commute");
            }
    }
}

std::size_t FiniteQuotientMap::image(const Word& w) const
{
    return image(0, w);
}

std::size_t FiniteQuotientMap::image(std::size_t x, const Word& w) const
{
    for (auto s : w) x = right_.at(s).at(x);
    return x;
}

DisplacementReport verify_displacement(const CoxeterSystem& W, const FiniteQuotientMap& phi, int m, std::size_t cap)
{
    if (m < 0) throw DomainError("displacement radius must be >= 0");
    // Th(Sigma) neighbours of g are g u, u a nontrivial element of some W_T
    std::vector<Word> steps;
    for (const auto& T : W.cliques()) steps.push_back(T.size() == 1 ? Word{T[0]} : Word(T.begin(), T.end()));
    DisplacementReport rep;
    rep.m = m;
    std::map<Word, std::size_t> seen;  // element -> image
    std::unordered_map<std::size_t, Word> by_image;
    std::vector<Word> layer{Word{}};
    seen.emplace(Word{}, 0);
    by_image.emplace(phi.image(Word{}), Word{});
    auto record = [&](const Word& g, std::size_t img) {
        auto [it, fresh] = by_image.emplace(img, g);
        if (fresh || !rep.verdict) return;
        rep.verdict = false;
        rep.first = it->second;
        rep.second = g;
        Word a = normal_form(W, concat(inverse(it->second), g));
        Word b = normal_form(W, concat(inverse(g), it->second));
        rep.kernel_element = shortlex_less(b, a) ? b : a;
    };
    for (int r = 0; r < m; ++r) {
        std::set<Word> next;
        for (const Word& g : layer)
            for (const Word& u : steps) {
                Word h = normal_form(W, concat(g, u));
                if (!seen.count(h)) next.insert(std::move(h));
            }
        if (seen.size() + next.size() > cap) throw ResourceError("displacement ball exceeds the size cap");
        layer.assign(next.begin(), next.end());
        for (const Word& h : layer) {
            const std::size_t img = phi.image(h);
            seen.emplace(h, img);
            record(h, img);
        }
    }
    rep.ball_size = seen.size();
    return rep;
}

SimplicialComplex quotient_thickening(const CoxeterSystem& W, const FiniteQuotientMap& phi, std::size_t max_faces)
{
    const auto rep = verify_displacement(W, phi, kQuotientDisplacement);
    if (!rep.verdict) {
        throw DisplacementError("quotient map is not injective on the radius " +
                                    std::to_string(kQuotientDisplacement) + " ball; kernel element " +
                                    W.format(*rep.kernel_element),
                                *rep.kernel_element);
    }
    std::vector<std::vector<Word>> cells;
    for (const auto& T : W.maximal_cliques()) cells.push_back(clique_elements(T));
    std::set<std::vector<VertexId>> faces;
    for (std::size_t f = 0; f < phi.order(); ++f)
        for (const auto& cell : cells) {
            std::vector<VertexId> face;
            for (const Word& u : cell) face.push_back(static_cast<VertexId>(phi.image(f, u)));
            std::sort(face.begin(), face.end());
            faces.insert(std::move(face));
        }
    return SimplicialComplex::from_maximal_faces(std::vector<std::vector<VertexId>>(faces.begin(), faces.end()),
                                                 max_faces);
}

bool Certificate51::all_verdicts_true() const
{
    return nerve_five_large && nerve_sd2star_links && displacement.verdict && five_large && sd2star_links &&
           cohomology_prediction.value_or(true);
}

QuotientVerdicts recheck_quotient(const SimplicialComplex& X, std::optional<int> degree)
{
    QuotientVerdicts q;
    auto five = check_k_large(X, 5);
    q.five_large = five.verdict;
    q.six_large = check_k_large(X, 6, {1}).verdict;
    auto links = check_sd2star_links(X);
    q.sd2star_links = links.verdict;
    q.witnesses = std::move(five.witnesses);
    q.witnesses.insert(q.witnesses.end(), links.witnesses.begin(), links.witnesses.end());
    if (degree && *degree >= 0) q.rank = cohomology_Q(X, *degree, true)[static_cast<std::size_t>(*degree)];
    return q;
}

Certificate51 section51_step(const SimplicialComplex& nerve, const FiniteQuotientMap& phi, const Step51Options& opt)
{
    return section51_step(CoxeterSystem(nerve), phi, opt);
}

Certificate51 section51_step(const CoxeterSystem& W, const FiniteQuotientMap& phi, const Step51Options& opt)
{
    const SimplicialComplex& nerve = W.nerve();
    Certificate51 c;
    c.nerve_five_large = check_k_large(nerve, 5, {1}).verdict;
    c.nerve_sd2star_links = check_sd2star_links(nerve, {1}).verdict;
    if (!c.nerve_five_large) throw DomainError("nerve is not 5-large");
    if (!c.nerve_sd2star_links) throw DomainError("nerve does not have SD2* links");

    const auto coh = cohomology_Q(nerve, std::max(nerve.dimension(), opt.degree.value_or(0)), true);
    if (opt.degree) {
        if (*opt.degree < 0) throw DomainError("cohomology degree must be >= 0");
        c.nerve_rank = coh[static_cast<std::size_t>(*opt.degree)];
        if (c.nerve_rank > 0) c.degree = opt.degree;
    } else {
        for (int d = static_cast<int>(coh.size()) - 1; d >= 0; --d)
            if (coh[static_cast<std::size_t>(d)] > 0) {
                c.degree = d;
                c.nerve_rank = coh[static_cast<std::size_t>(d)];
                break;
            }
    }

    c.displacement = verify_displacement(W, phi, kQuotientDisplacement);
    c.quotient = quotient_thickening(W, phi, opt.max_faces);
    const std::optional<int> target = c.degree ? std::optional<int>(*c.degree + 1) : std::nullopt;
    auto q = recheck_quotient(c.quotient, target);
    c.five_large = q.five_large;
    c.six_large = q.six_large;
    c.sd2star_links = q.sd2star_links;
    c.quotient_rank = q.rank;
    c.witnesses = std::move(q.witnesses);
    if (c.degree) {
        c.cohomology_prediction = c.quotient_rank > 0;
        c.vcd_lower_bound = *c.degree + 2;
    }
    return c;
}

Prop27Outcome prop27_harness(const CoxeterSystem& W, int davis_radius, std::size_t cap)
{
    Prop27Outcome out;
    out.davis_radius = davis_radius;
    const int c = std::max<int>(1, static_cast<int>(W.max_clique_size()));
    out.checked_radius = davis_radius / c - 1;
    out.report.condition = Condition::WeaklySystolicLocal;
    if (out.checked_radius < 1) {
        out.checked_radius = -1;
        return out;
    }
    const DavisBall D = davis_ball(W, davis_radius, cap);
    SystolicOptions opt;
    opt.centers = {D.identity};
    opt.max_radius = out.checked_radius;
    out.report = check_weakly_systolic_local(thicken(D.complex), opt);
    return out;
}

}  // namespace curvlab
