#include "curvlab/io.hpp"

#include <fstream>
#include <sstream>

namespace curvlab::io {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

void expect_type(const Json& j, const char* type)
{
    const Json& t = field(j, "type");
    if (!t.is_string() || t.get<std::string>() != type) {
        throw InputError(std::string("expected \"type\": \"") + type + "\"");
    }
}

std::int64_t as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const Json& j, const char* what)
{
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(as_int(v, what));
    return out;
}

std::vector<std::vector<std::int64_t>> int_rows(const Json& j, const char* what)
{
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& row : j) out.push_back(int_list(row, what));
    return out;
}

Json vertex_list(std::span<const VertexId> v)
{
    return Json(std::vector<VertexId>(v.begin(), v.end()));
}

Simplex simplex_from(const Json& j)
{
    return Simplex::from_unordered(int_list(j, "simplex"));
}

Json wheel_json(const Wheel& w)
{
    Json j;
    j["hub"] = w.hub;
    j["rim"] = w.rim.vertices;
    j["pendant"] = w.pendant ? Json(*w.pendant) : Json(nullptr);
    return j;
}

Wheel wheel_from(const Json& j)
{
    Wheel w;
    w.hub = as_int(field(j, "hub"), "hub");
    w.rim.vertices = int_list(field(j, "rim"), "rim");
    if (j.contains("pendant") && !j.at("pendant").is_null()) w.pendant = as_int(j.at("pendant"), "pendant");
    return w;
}

Condition condition_from(const std::string& name)
{
    for (auto c : {Condition::Flag, Condition::KLarge, Condition::LocallyKLarge, Condition::SD2Star,
                   Condition::SD2StarLinks, Condition::WeaklySystolicLocal})
        if (condition_name(c) == name) return c;
    throw InputError("unknown condition \"" + name + "\"");
}

Json word_json(const CoxeterSystem& W, const std::optional<Word>& w)
{
    return w ? Json(W.format(*w)) : Json(nullptr);
}

}  // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source + ": " + e.what());
    }
}

Json to_json(const SimplicialComplex& X)
{
    Json faces = Json::array();
    for (const auto& f : X.maximal_faces()) faces.push_back(to_json(f));
    Json j;
    j["type"] = "simplicial";
    j["maximal_simplices"] = std::move(faces);
    return j;
}

SimplicialComplex simplicial_from_json(const Json& j, std::size_t max_faces)
{
    expect_type(j, "simplicial");
    std::vector<Simplex> faces;
    for (const auto& f : int_rows(field(j, "maximal_simplices"), "maximal_simplices")) {
        if (f.empty()) throw InputError("empty simplex in maximal_simplices");
        faces.push_back(Simplex::from_unordered(f));
    }
    return SimplicialComplex::from_maximal_faces(faces, max_faces);
}

Json to_json(const CubicalComplex& Y)
{
    Json cubes = Json::array();
    for (CubeId c : Y.maximal_cubes()) {
        const Cube& q = Y.cubes()[c];
        Json e;
        e["dim"] = q.dim();
        e["vertices"] = vertex_list(q.vertices());
        cubes.push_back(std::move(e));
    }
    Json j;
    j["type"] = "cubical";
    j["cubes"] = std::move(cubes);
    return j;
}

CubicalComplex cubical_from_json(const Json& j)
{
    expect_type(j, "cubical");
    const Json& list = field(j, "cubes");
    if (!list.is_array()) throw InputError("cubes must be an array");
    std::vector<Cube> cubes;
    for (const auto& e : list) {
        const auto d = as_int(field(e, "dim"), "dim");
        auto v = int_list(field(e, "vertices"), "vertices");
        if (d < 0 || d > 30 || v.size() != (std::size_t{1} << d)) {
            throw InputError("a cube of dim " + std::to_string(d) + " needs 2^dim vertices");
        }
        cubes.emplace_back(std::move(v));
    }
    return CubicalComplex::from_maximal_cubes(std::move(cubes));
}

std::string rational_string(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

mpq_class parse_rational(const std::string& s)
{
    const auto slash = s.find('/');
    auto integer = [&](const std::string& t) {
        mpz_class z;
        const bool sign = !t.empty() && (t[0] == '-' || t[0] == '+');
        if (t.size() == static_cast<std::size_t>(sign) ||
            t.find_first_not_of("0123456789", sign ? 1 : 0) != std::string::npos || z.set_str(t, 10) != 0) {
            throw InputError("bad rational \"" + s + "\"");
        }
        return z;
    };
    if (slash == std::string::npos) return mpq_class(integer(s));
    const mpz_class den = integer(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in \"" + s + "\"");
    mpq_class q(integer(s.substr(0, slash)), den);
    q.canonicalize();
    return q;
}

Json to_json(const FiniteMetricSpace& M)
{
    Json rows = Json::array();
    for (const auto& row : M.matrix()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rational_string(v));
        rows.push_back(std::move(r));
    }
    Json j;
    j["type"] = "metric";
    j["points"] = M.points();
    j["dist"] = std::move(rows);
    return j;
}

FiniteMetricSpace metric_from_json(const Json& j)
{
    expect_type(j, "metric");
    auto points = int_list(field(j, "points"), "points");
    const Json& rows = field(j, "dist");
    if (!rows.is_array()) throw InputError("dist must be an array of arrays");
    std::vector<std::vector<mpq_class>> dist;
    for (const auto& row : rows) {
        if (!row.is_array()) throw InputError("dist must be an array of arrays");
        std::vector<mpq_class> r;
        for (const auto& v : row) {
            if (v.is_number_integer()) {
                r.emplace_back(mpz_class(std::to_string(v.get<std::int64_t>())));
            } else if (v.is_string()) {
                r.push_back(parse_rational(v.get<std::string>()));
            } else {
                throw InputError("distances must be integers or \"p/q\" strings");
            }
        }
        dist.push_back(std::move(r));
    }
    return FiniteMetricSpace(std::move(points), std::move(dist));
}

FiniteQuotientMap quotient_map_from_json(const CoxeterSystem& W, const Json& j, std::size_t cap)
{
    if (!j.is_object()) throw InputError("quotient map must be a JSON object");
    FiniteQuotientMap phi = [&] {
        if (j.contains("gen_permutations")) {
            return FiniteQuotientMap::from_permutations(W, int_rows(j.at("gen_permutations"), "gen_permutations"),
                                                        cap);
        }
        if (j.contains("table")) {
            return FiniteQuotientMap::from_table(W, int_rows(j.at("table"), "table"),
                                                 int_list(field(j, "gen_images"), "gen_images"));
        }
        throw InputError("quotient map needs \"table\" and \"gen_images\", or \"gen_permutations\"");
    }();
    if (j.contains("order")) {
        const auto order = as_int(j.at("order"), "order");
        if (order < 0 || static_cast<std::size_t>(order) != phi.order()) {
            throw InputError("declared order " + std::to_string(order) + " but the images generate a group of order " +
                             std::to_string(phi.order()));
        }
    }
    return phi;
}

Json to_json(const Simplex& s)
{
    return vertex_list(s.vertices());
}

Json to_json(const Witness& w)
{
    Json j;
    j["link_of"] = w.link_of ? to_json(*w.link_of) : Json(nullptr);
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, NonFlagClique>) {
                j["kind"] = "non_flag_clique";
                j["clique"] = to_json(d.clique);
            } else if constexpr (std::is_same_v<T, ShortCycle>) {
                j["kind"] = "short_cycle";
                j["cycle"] = d.cycle.vertices;
            } else if constexpr (std::is_same_v<T, FourWheel>) {
                j["kind"] = "four_wheel";
                j["wheel"] = wheel_json(d.wheel);
            } else if constexpr (std::is_same_v<T, UncoveredPendantWheel>) {
                j["kind"] = "uncovered_pendant_wheel";
                j["wheel"] = wheel_json(d.wheel);
            } else {
                j["kind"] = "ball_intersection";
                j["center"] = d.center;
                j["radius"] = d.radius;
                j["sigma"] = to_json(d.sigma);
                Json inter = Json::array();
                for (const auto& f : d.intersection) inter.push_back(to_json(f));
                j["intersection"] = std::move(inter);
            }
        },
        w.detail);
    return j;
}

Witness witness_from_json(const Json& j)
{
    Witness w;
    if (j.contains("link_of") && !j.at("link_of").is_null()) w.link_of = simplex_from(j.at("link_of"));
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw InputError("witness kind must be a string");
    const auto k = kind.get<std::string>();
    if (k == "non_flag_clique") {
        w.detail = NonFlagClique{simplex_from(field(j, "clique"))};
    } else if (k == "short_cycle") {
        w.detail = ShortCycle{CycleSubcomplex{int_list(field(j, "cycle"), "cycle")}};
    } else if (k == "four_wheel") {
        w.detail = FourWheel{wheel_from(field(j, "wheel"))};
    } else if (k == "uncovered_pendant_wheel") {
        w.detail = UncoveredPendantWheel{wheel_from(field(j, "wheel"))};
    } else if (k == "ball_intersection") {
        BallIntersection b;
        b.center = as_int(field(j, "center"), "center");
        b.radius = static_cast<int>(as_int(field(j, "radius"), "radius"));
        b.sigma = simplex_from(field(j, "sigma"));
        const Json& inter = field(j, "intersection");
        if (!inter.is_array()) throw InputError("intersection must be an array");
        for (const auto& f : inter) b.intersection.push_back(simplex_from(f));
        w.detail = std::move(b);
    } else {
        throw InputError("unknown witness kind \"" + k + "\"");
    }
    return w;
}

Json to_json(const CurvatureReport& r)
{
    Json j;
    j["condition"] = condition_name(r.condition);
    if (r.condition == Condition::KLarge || r.condition == Condition::LocallyKLarge) j["k"] = r.k;
    j["verdict"] = r.verdict;
    Json w = Json::array();
    for (const auto& x : r.witnesses) w.push_back(to_json(x));
    j["witnesses"] = std::move(w);
    return j;
}

CurvatureReport curvature_report_from_json(const Json& j)
{
    CurvatureReport r;
    const Json& c = field(j, "condition");
    if (!c.is_string()) throw InputError("condition must be a string");
    r.condition = condition_from(c.get<std::string>());
    if (j.contains("k")) r.k = static_cast<int>(as_int(j.at("k"), "k"));
    const Json& v = field(j, "verdict");
    if (!v.is_boolean()) throw InputError("verdict must be a boolean");
    r.verdict = v.get<bool>();
    const Json& w = field(j, "witnesses");
    if (!w.is_array()) throw InputError("witnesses must be an array");
    for (const auto& x : w) r.witnesses.push_back(witness_from_json(x));
    return r;
}

Json to_json(const LinkVerdict& v)
{
    Json j;
    j["verdict"] = v.verdict;
    j["vertex"] = v.vertex ? Json(*v.vertex) : Json(nullptr);
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    return j;
}

Json to_json(const HomologyResult& h)
{
    Json betti = Json::array(), torsion = Json::array();
    for (const auto& g : h.groups) {
        betti.push_back(g.betti);
        Json t = Json::array();
        for (const auto& d : g.torsion) t.push_back(d.get_str());
        torsion.push_back(std::move(t));
    }
    Json j;
    j["betti"] = std::move(betti);
    j["torsion"] = std::move(torsion);
    return j;
}

Json to_json(const InducedMap& f)
{
    Json m = Json::array();
    for (const auto& row : f.matrix) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rational_string(v));
        m.push_back(std::move(r));
    }
    Json j;
    j["degree"] = f.degree;
    j["source_rank"] = f.source_rank;
    j["target_rank"] = f.target_rank;
    j["rank"] = f.rank();
    j["matrix"] = std::move(m);
    j["free_part_only"] = f.free_part_only;
    return j;
}

Json to_json(const RationalChain& c)
{
    Json out = Json::array();
    for (const auto& [s, v] : c) {
        Json t;
        t["simplex"] = to_json(s);
        t["coefficient"] = rational_string(v);
        out.push_back(std::move(t));
    }
    return out;
}

Json to_json(const ProbeResult& p)
{
    Json j;
    j["verdict"] = p.verdict;
    j["map"] = to_json(p.map);
    j["surviving"] = p.surviving ? to_json(*p.surviving) : Json(nullptr);
    return j;
}

Json to_json(const FiltrationLadder& l)
{
    Json j;
    j["degree"] = l.degree;
    Json radii = Json::array();
    for (const auto& r : l.radii) radii.push_back(rational_string(r));
    j["radii"] = std::move(radii);
    j["ranks"] = l.ranks;
    Json maps = Json::array();
    for (const auto& m : l.maps) maps.push_back(to_json(m));
    j["maps"] = std::move(maps);
    Json death = Json::array();
    for (const auto& row : l.death) {
        Json r = Json::array();
        for (const auto& d : row) r.push_back(d ? Json(rational_string(*d)) : Json(nullptr));
        death.push_back(std::move(r));
    }
    j["death"] = std::move(death);
    return j;
}

Json to_json(const CoxeterSystem& W, const DisplacementReport& d)
{
    Json j;
    j["m"] = d.m;
    j["verdict"] = d.verdict;
    j["ball_size"] = d.ball_size;
    j["first"] = word_json(W, d.first);
    j["second"] = word_json(W, d.second);
    j["kernel_element"] = word_json(W, d.kernel_element);
    return j;
}

Json to_json(const QuotientVerdicts& q)
{
    Json j;
    j["five_large"] = q.five_large;
    j["six_large"] = q.six_large;
    j["sd2star_links"] = q.sd2star_links;
    j["rank"] = q.rank;
    Json w = Json::array();
    for (const auto& x : q.witnesses) w.push_back(to_json(x));
    j["witnesses"] = std::move(w);
    return j;
}

Json to_json(const CoxeterSystem& W, const Certificate51& c)
{
    Json nerve;
    nerve["five_large"] = c.nerve_five_large;
    nerve["sd2star_links"] = c.nerve_sd2star_links;
    nerve["degree"] = c.degree ? Json(*c.degree) : Json(nullptr);
    nerve["reduced_cohomology_rank"] = c.nerve_rank;
    Json quotient;
    quotient["f_vector"] = c.quotient.f_vector();
    quotient["five_large"] = c.five_large;
    quotient["six_large"] = c.six_large;
    quotient["sd2star_links"] = c.sd2star_links;
    quotient["cohomology_degree"] = c.degree ? Json(*c.degree + 1) : Json(nullptr);
    quotient["reduced_cohomology_rank"] = c.quotient_rank;
    Json j;
    j["nerve"] = std::move(nerve);
    j["displacement"] = to_json(W, c.displacement);
    j["quotient"] = std::move(quotient);
    j["cohomology_prediction"] = c.cohomology_prediction ? Json(*c.cohomology_prediction) : Json(nullptr);
    j["vcd_lower_bound"] = c.vcd_lower_bound ? Json(*c.vcd_lower_bound) : Json(nullptr);
    Json w = Json::array();
    for (const auto& x : c.witnesses) w.push_back(to_json(x));
    j["witnesses"] = std::move(w);
    j["verdict"] = c.all_verdicts_true();
    return j;
}

Json to_json(const Prop27Outcome& p)
{
    Json j;
    j["davis_radius"] = p.davis_radius;
    j["checked_radius"] = p.checked_radius;
    j["report"] = to_json(p.report);
    return j;
}

}  // namespace curvlab::io
