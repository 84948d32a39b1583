#include "curvlab/cli.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "curvlab/io.hpp"

namespace curvlab::cli {

namespace {

using io::Json;

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

// State shared by all subcommands of one invocation.
struct Session {
    std::vector<std::string> args;
    std::string inputs;  // length-prefixed contents of every input, in order
    bool any_input = false;
    std::size_t max_faces = kDefaultMaxFaces;
    std::size_t max_ball = kDefaultBallCap;
    std::size_t max_witnesses = 8;

    void add_input(const std::string& bytes)
    {
        inputs += std::to_string(bytes.size()) + ":" + bytes;
        any_input = true;
    }

    Json load(const std::string& path)
    {
        std::string text = io::read_file(path);
        add_input(text);
        return io::parse_json(text, path);
    }

    SimplicialComplex complex(const std::string& path) { return io::simplicial_from_json(load(path), max_faces); }

    FiniteMetricSpace metric(const std::string& path, const std::string& gen)
    {
        if (!gen.empty() && !path.empty()) throw InputError("give either a metric file or --gen, not both");
        if (!gen.empty()) {
            add_input("gen:" + gen);
            return metric_gen::parse(gen);
        }
        if (path.empty()) throw InputError("a metric file or --gen is required");
        return io::metric_from_json(load(path));
    }

    CheckOptions check_options() const { return CheckOptions{max_witnesses}; }
};

std::string type_of(const Json& j)
{
    if (j.is_object() && j.contains("type") && j.at("type").is_string()) return j.at("type").get<std::string>();
    return {};
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot write " + path);
    os << j.dump() << '\n';
}

std::vector<mpq_class> rationals(const std::vector<std::string>& v)
{
    std::vector<mpq_class> out;
    for (const auto& s : v) out.push_back(io::parse_rational(s));
    return out;
}

// A subcommand's handler fills the report and returns the exit code.
using Handler = std::function<int(Session&, Json&)>;

struct Command {
    CLI::App* app;
    Handler handler;
};

void add_check(CLI::App& root, std::vector<Command>& cmds)
{
    struct Opts {
        std::string condition, file;
        int k = 6;
        std::vector<VertexId> centers;
        int max_radius = -1;
        bool literal = false;
    };
    auto o = std::make_shared<Opts>();
    auto* app = root.add_subcommand("check", "Check a curvature condition");
    app->add_option("condition", o->condition,
                    "flag, k_large, locally_k_large, sd2star, sd2star_links, weakly_systolic_local or prop29 "
                    "for simplicial input; locally_flag, locally_5_large, links_sd2star or lemma26 for cubical")
        ->required();
    app->add_option("file", o->file, "Complex (JSON)")->required();
    app->add_option("--k", o->k, "k for k_large and locally_k_large")->capture_default_str();
    app->add_option("--center", o->centers, "Restrict weakly_systolic_local to these vertices")->delimiter(',');
    app->add_option("--max-radius", o->max_radius, "Largest radius for weakly_systolic_local");
    app->add_flag("--literal", o->literal, "lemma26: assume only SD2* links");
    cmds.push_back({app, [o](Session& s, Json& r) {
                        const Json j = s.load(o->file);
                        const std::string type = type_of(j);
                        const auto& c = o->condition;
                        if (type == "cubical") {
                            const CubicalComplex Y = io::cubical_from_json(j);
                            r["condition"] = c;
                            if (c == "lemma26") {
                                const auto rep = verify_lemma26(Y,
                                                                o->literal ? Lemma26Hypothesis::LinksSD2Star
                                                                           : Lemma26Hypothesis::LinksSD2StarFiveLarge,
                                                                s.check_options());
                                r["hypothesis"] = o->literal ? "sd2star_links" : "sd2star_links_five_large";
                                r["verdict"] = rep.verdict;
                                r["thickening"] = io::to_json(rep);
                                return rep.verdict ? kTrue : kFalse;
                            }
                            LinkVerdict v;
                            if (c == "locally_flag") {
                                v = is_locally_flag(Y);
                            } else if (c == "locally_5_large") {
                                v = is_locally_5_large(Y);
                            } else if (c == "links_sd2star") {
                                v = links_satisfy_sd2star(Y);
                            } else {
                                throw InputError("unknown condition \"" + c + "\" for a cubical complex");
                            }
                            r.update(io::to_json(v));
                            return v.verdict ? kTrue : kFalse;
                        }
                        if (type != "simplicial") throw InputError(o->file + ": expected a simplicial or cubical complex");
                        const SimplicialComplex X = io::simplicial_from_json(j, s.max_faces);
                        if (c == "prop29") {
                            const auto p = crosscheck_prop29(X);
                            r["condition"] = c;
                            r["links_side"] = p.links_side;
                            r["subcomplexes_side"] = p.subcomplexes_side;
                            r["verdict"] = p.agree();
                            return p.agree() ? kTrue : kFalse;
                        }
                        CurvatureReport rep;
                        if (c == "flag") {
                            rep = check_flag(X, s.check_options());
                        } else if (c == "k_large") {
                            rep = check_k_large(X, o->k, s.check_options());
                        } else if (c == "locally_k_large") {
                            rep = is_locally_k_large(X, o->k, s.check_options());
                        } else if (c == "sd2star") {
                            rep = check_sd2star(X, s.check_options());
                        } else if (c == "sd2star_links") {
                            rep = check_sd2star_links(X, s.check_options());
                        } else if (c == "weakly_systolic_local") {
                            SystolicOptions opt;
                            opt.max_witnesses = s.max_witnesses;
                            opt.centers = o->centers;
                            opt.max_radius = o->max_radius;
                            rep = check_weakly_systolic_local(X, opt);
                        } else {
                            throw InputError("unknown condition \"" + c + "\" for a simplicial complex");
                        }
                        r.update(io::to_json(rep));
                        return rep.verdict ? kTrue : kFalse;
                    }});
}

void add_thicken(CLI::App& root, std::vector<Command>& cmds)
{
    struct Opts {
        std::string file, out_file;
    };
    auto o = std::make_shared<Opts>();
    auto* app = root.add_subcommand("thicken", "Thickening of a cubical complex");
    app->add_option("file", o->file, "Cubical complex (JSON)")->required();
    app->add_option("--out", o->out_file, "Also write the thickening to this file");
    cmds.push_back({app, [o](Session& s, Json& r) {
                        const auto T = thicken(io::cubical_from_json(s.load(o->file)), s.max_faces);
                        const Json c = io::to_json(T);
                        if (!o->out_file.empty()) write_json_file(o->out_file, c);
                        r["f_vector"] = T.f_vector();
                        r["complex"] = c;
                        return kTrue;
                    }});
}

void add_homology(CLI::App& root, std::vector<Command>& cmds)
{
    struct Opts {
        std::string file;
        int upto = 2;
        bool reduced = false, rational = false;
    };
    auto o = std::make_shared<Opts>();
    auto* app = root.add_subcommand("homology", "Integral homology of a simplicial complex");
    app->add_option("file", o->file, "Simplicial complex (JSON)")->required();
    app->add_option("--upto", o->upto, "Top degree")->capture_default_str()->check(CLI::NonNegativeNumber);
    app->add_flag("--reduced", o->reduced, "Reduced homology");
    app->add_flag("--rational-cohomology", o->rational, "Also report dim H^k(X; Q)");
    cmds.push_back({app, [o](Session& s, Json& r) {
                        const auto X = s.complex(o->file);
                        r["reduced"] = o->reduced;
                        r.update(io::to_json(homology(X, o->upto, o->reduced)));
                        if (o->rational) r["rational_cohomology"] = cohomology_Q(X, o->upto, o->reduced);
                        return kTrue;
                    }});
}

void add_rips(CLI::App& root, std::vector<Command>& cmds)
{
    struct Opts {
        std::string file, gen, r, out_file;
        int max_dim = -1, homology = -1, degree = 1;
        std::vector<std::string> ladder;
        bool summary = false;
    };
    auto o = std::make_shared<Opts>();
    auto* app = root.add_subcommand("rips", "Rips complexes of a finite metric space");
    app->add_option("file", o->file, "Metric (JSON)");
    app->add_option("--gen", o->gen, "Generated metric: cycle:N, path:N, star:N, btree:D, grid:WxH[:l1|:linf]");
    app->add_option("--r", o->r, "Scale, an integer or p/q");
    app->add_option("--max-dim", o->max_dim, "Truncate at this dimension");
    app->add_option("--homology", o->homology, "Report homology up to this degree")->check(CLI::NonNegativeNumber);
    app->add_option("--ladder", o->ladder, "Ascending scales for a filtration ladder")->delimiter(',');
    app->add_option("--degree", o->degree, "Homology degree of the ladder")->capture_default_str();
    app->add_option("--out", o->out_file, "Also write the complex to this file");
    app->add_flag("--summary", o->summary, "Leave the complex out of the report");
    cmds.push_back({app, [o](Session& s, Json& r) {
                        const auto M = s.metric(o->file, o->gen);
                        if (!o->ladder.empty()) {
                            if (!o->r.empty()) throw InputError("--ladder and --r are exclusive");
                            const auto radii = rationals(o->ladder);
                            r["ladder"] = io::to_json(filtration_maps(M, radii, o->degree, false, s.max_faces));
                            return kTrue;
                        }
                        if (o->r.empty()) throw InputError("--r or --ladder is required");
                        const mpq_class scale = io::parse_rational(o->r);
                        int dim = o->max_dim;
                        if (o->homology >= 0 && (dim < 0 || dim > o->homology + 1)) dim = o->homology + 1;
                        const auto P = rips(M, scale, dim, s.max_faces);
                        r["r"] = io::rational_string(scale);
                        r["max_dim"] = dim;
                        r["f_vector"] = P.f_vector();
                        if (o->homology >= 0) r.update(io::to_json(homology(P, o->homology)));
                        const Json c = io::to_json(P);
                        if (!o->out_file.empty()) write_json_file(o->out_file, c);
                        if (!o->summary) r["complex"] = c;
                        return kTrue;
                    }});
}

void add_probe(CLI::App& root, std::vector<Command>& cmds)
{
    struct Opts {
        std::string kind, file, gen, r, R;
        int i = 1;
        std::vector<VertexId> subset, K, L;
        std::string l_radius;
    };
    auto o = std::make_shared<Opts>();
    auto* app = root.add_subcommand("probe", "Homological (i;r,R) probes");
    app->add_option("kind", o->kind, "aspherical or complement")->required();
    app->add_option("file", o->file, "Metric (JSON)");
    app->add_option("--gen", o->gen, "Generated metric, as for rips");
    app->add_option("--i", o->i, "Homology degree")->capture_default_str();
    app->add_option("--r", o->r, "Inner scale")->required();
    app->add_option("--R", o->R, "Outer scale")->required();
    app->add_option("--subset", o->subset, "aspherical: the subset A (default: all points)")->delimiter(',');
    app->add_option("--K", o->K, "complement: the inner set K")->delimiter(',');
    app->add_option("--L", o->L, "complement: the outer set L")->delimiter(',');
    app->add_option("--L-radius", o->l_radius, "complement: take L to be the closed neighbourhood of K of this radius");
    cmds.push_back({app, [o](Session& s, Json& r) {
                        const auto M = s.metric(o->file, o->gen);
                        const ScalePair sc(io::parse_rational(o->r), io::parse_rational(o->R));
                        r["kind"] = o->kind;
                        r["i"] = o->i;
                        r["r"] = io::rational_string(sc.r);
                        r["R"] = io::rational_string(sc.R);
                        ProbeResult p;
                        if (o->kind == "aspherical") {
                            std::vector<VertexId> A = o->subset;
                            if (A.empty()) A.assign(M.points().begin(), M.points().end());
                            std::sort(A.begin(), A.end());
                            r["subset_size"] = A.size();
                            p = homological_asphericity_probe(M, A, o->i, sc, s.max_faces);
                        } else if (o->kind == "complement") {
                            if (o->K.empty()) throw InputError("complement probe needs --K");
                            if (!o->L.empty() && !o->l_radius.empty()) throw InputError("give --L or --L-radius, not both");
                            auto K = o->K;
                            std::sort(K.begin(), K.end());
                            auto L = o->l_radius.empty() ? o->L : M.neighbourhood(K, io::parse_rational(o->l_radius));
                            std::sort(L.begin(), L.end());
                            r["K"] = K;
                            r["L"] = L;
                            p = complement_probe(M, K, L, o->i, sc, s.max_faces);
                        } else {
                            throw InputError("unknown probe \"" + o->kind + "\"");
                        }
                        r.update(io::to_json(p));
                        return p.verdict ? kTrue : kFalse;
                    }});
}

void add_fill(CLI::App& root, std::vector<Command>& cmds)
{
    struct Opts {
        std::string file;
        std::vector<VertexId> loop;
    };
    auto o = std::make_shared<Opts>();
    auto* app = root.add_subcommand("fill", "Filling radius of a loop");
    app->add_option("file", o->file, "Simplicial complex (JSON)")->required();
    app->add_option("--loop", o->loop, "Loop vertices in order")->delimiter(',')->required();
    cmds.push_back({app, [o](Session& s, Json& r) {
                        const auto X = s.complex(o->file);
                        const auto f = filling_radius_estimate(X, CycleSubcomplex{o->loop});
                        r["loop"] = o->loop;
                        r["filling_radius"] = f.is_infinite() ? Json("inf") : Json(f.value());
                        return kTrue;
                    }});
}

void add_coxeter(CLI::App& root, std::vector<Command>& cmds)
{
    auto* cox = root.add_subcommand("coxeter", "Right-angled Coxeter groups");
    cox->require_subcommand(1);

    struct Opts {
        std::string nerve, phi, file, out_file;
        int radius = 2, m = kQuotientDisplacement, degree = -1;
        bool list = false;
        std::vector<std::string> words;
    };
    auto o = std::make_shared<Opts>();
    auto system = [o](Session& s) { return CoxeterSystem(s.complex(o->nerve)); };

    auto* ball = cox->add_subcommand("ball", "Word-length ball of the Cayley graph");
    ball->add_option("nerve", o->nerve, "Nerve (JSON)")->required();
    ball->add_option("--radius", o->radius, "Radius")->capture_default_str();
    ball->add_flag("--list", o->list, "List the elements");
    cmds.push_back({ball, [o, system](Session& s, Json& r) {
                        const auto W = system(s);
                        const auto B = cayley_ball(W, o->radius, s.max_ball);
                        std::vector<std::size_t> growth(static_cast<std::size_t>(o->radius) + 1, 0);
                        for (const auto& w : B.elements) ++growth[w.size()];
                        r["rank"] = W.rank();
                        r["radius"] = o->radius;
                        r["size"] = B.elements.size();
                        r["growth"] = growth;
                        r["edges"] = B.edges.size();
                        if (o->list) {
                            Json e = Json::array();
                            for (const auto& w : B.elements) e.push_back(W.format(w));
                            r["elements"] = std::move(e);
                        }
                        return kTrue;
                    }});

    auto* davis = cox->add_subcommand("davis", "Ball in the Davis complex");
    davis->add_option("nerve", o->nerve, "Nerve (JSON)")->required();
    davis->add_option("--radius", o->radius, "Radius")->capture_default_str();
    davis->add_option("--out", o->out_file, "Also write the cubical complex to this file");
    cmds.push_back({davis, [o, system](Session& s, Json& r) {
                        const auto W = system(s);
                        const auto D = davis_ball(W, o->radius, s.max_ball);
                        const Json c = io::to_json(D.complex);
                        if (!o->out_file.empty()) write_json_file(o->out_file, c);
                        Json e = Json::array();
                        for (const auto& w : D.elements) e.push_back(W.format(w));
                        r["radius"] = o->radius;
                        r["vertices"] = D.elements.size();
                        r["maximal_cubes"] = D.complex.maximal_cubes().size();
                        r["elements"] = std::move(e);
                        r["complex"] = c;
                        return kTrue;
                    }});

    auto* nf = cox->add_subcommand("normal-form", "Normal forms of words");
    nf->add_option("nerve", o->nerve, "Nerve (JSON)")->required();
    nf->add_option("words", o->words, "Words, as letters or dot-separated generator ids")->required();
    cmds.push_back({nf, [o, system](Session& s, Json& r) {
                        const auto W = system(s);
                        Json out = Json::array();
                        for (const auto& w : o->words) {
                            Json e;
                            e["word"] = w;
                            e["normal_form"] = W.format(normal_form(W, W.parse(w)));
                            out.push_back(std::move(e));
                        }
                        r["normal_forms"] = std::move(out);
                        return kTrue;
                    }});

    auto* disp = cox->add_subcommand("displacement", "Injectivity of a quotient map on a ball");
    disp->add_option("nerve", o->nerve, "Nerve (JSON)")->required();
    disp->add_option("phi", o->phi, "Quotient map (JSON)")->required();
    disp->add_option("--m", o->m, "Radius")->capture_default_str();
    cmds.push_back({disp, [o, system](Session& s, Json& r) {
                        const auto W = system(s);
                        const auto phi = io::quotient_map_from_json(W, s.load(o->phi), s.max_ball);
                        const auto d = verify_displacement(W, phi, o->m, s.max_ball);
                        r["order"] = phi.order();
                        r.update(io::to_json(W, d));
                        return d.verdict ? kTrue : kFalse;
                    }});

    auto* quot = cox->add_subcommand("quotient", "Quotient of the thickened Davis complex");
    quot->add_option("nerve", o->nerve, "Nerve (JSON)")->required();
    quot->add_option("phi", o->phi, "Quotient map (JSON)")->required();
    quot->add_option("--out", o->out_file, "Also write the quotient to this file");
    cmds.push_back({quot, [o, system](Session& s, Json& r) {
                        const auto W = system(s);
                        const auto phi = io::quotient_map_from_json(W, s.load(o->phi), s.max_ball);
                        const auto X = quotient_thickening(W, phi, s.max_faces);
                        const Json c = io::to_json(X);
                        if (!o->out_file.empty()) write_json_file(o->out_file, c);
                        r["order"] = phi.order();
                        r["f_vector"] = X.f_vector();
                        r["complex"] = c;
                        return kTrue;
                    }});

    auto* step = cox->add_subcommand("step51", "Certificate for one step of the quotient construction");
    step->add_option("nerve", o->nerve, "Nerve (JSON)")->required();
    step->add_option("phi", o->phi, "Quotient map (JSON)")->required();
    step->add_option("--degree", o->degree, "Cohomology degree of the nerve (default: the largest nonzero)");
    step->add_option("--quotient-out", o->out_file, "Write the quotient complex to this file");
    cmds.push_back({step, [o, system](Session& s, Json& r) {
                        const auto W = system(s);
                        const auto phi = io::quotient_map_from_json(W, s.load(o->phi), s.max_ball);
                        Step51Options opt;
                        if (o->degree >= 0) opt.degree = o->degree;
                        opt.max_faces = s.max_faces;
                        const auto c = section51_step(W, phi, opt);
                        const Json q = io::to_json(c.quotient);
                        if (!o->out_file.empty()) write_json_file(o->out_file, q);
                        r["order"] = phi.order();
                        r.update(io::to_json(W, c));
                        r["quotient_digest"] = "sha256:" + sha256_hex(q.dump());
                        return c.all_verdicts_true() ? kTrue : kFalse;
                    }});

    auto* re = cox->add_subcommand("recheck", "Quotient-side checks from a serialized quotient");
    re->add_option("file", o->file, "Quotient complex (JSON)")->required();
    re->add_option("--degree", o->degree, "Reduced cohomology degree to report");
    cmds.push_back({re, [o](Session& s, Json& r) {
                        const auto X = s.complex(o->file);
                        const auto q = recheck_quotient(X, o->degree >= 0 ? std::optional<int>(o->degree)
                                                                          : std::nullopt);
                        r["f_vector"] = X.f_vector();
                        r["degree"] = o->degree >= 0 ? Json(o->degree) : Json(nullptr);
                        r.update(io::to_json(q));
                        const bool ok = q.five_large && q.sd2star_links && (o->degree < 0 || q.rank > 0);
                        r["verdict"] = ok;
                        return ok ? kTrue : kFalse;
                    }});

    auto* p27 = cox->add_subcommand("prop27", "Weak systolicity near the identity of the thickened Davis complex");
    p27->add_option("nerve", o->nerve, "Nerve (JSON)")->required();
    p27->add_option("--radius", o->radius, "Davis ball radius")->capture_default_str();
    cmds.push_back({p27, [o, system](Session& s, Json& r) {
                        const auto W = system(s);
                        const auto p = prop27_harness(W, o->radius, s.max_ball);
                        r.update(io::to_json(p));
                        r["verdict"] = p.report.verdict;
                        return p.report.verdict ? kTrue : kFalse;
                    }});
}

std::size_t env_max_faces()
{
    const char* v = std::getenv("CURVLAB_MAX_FACES");
    if (!v || !*v) return kDefaultMaxFaces;
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || n == 0) throw InputError(std::string("CURVLAB_MAX_FACES must be a positive integer, got ") + v);
    return static_cast<std::size_t>(n);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Session session;
    session.args = args;
    bool pretty = false, timings = false;
    [[maybe_unused]] bool json = true;
    std::optional<std::size_t> max_faces;

    CLI::App app("Combinatorial curvature checks, thickenings, Rips probes and Coxeter quotients", "curvlab");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", json, "JSON output (the default)");
    app.add_flag("--pretty", pretty, "Indent the JSON report");
    app.add_flag("--timings", timings, "Add wall-clock timings to the report");
    app.add_option("--max-faces", max_faces, "Face cap for constructed complexes");
    app.add_option("--max-ball", session.max_ball, "Element cap for group balls")->capture_default_str();
    app.add_option("--max-witnesses", session.max_witnesses, "Witnesses kept per report")->capture_default_str();
    std::vector<Command> cmds;
    add_check(app, cmds);
    add_thicken(app, cmds);
    add_homology(app, cmds);
    add_rips(app, cmds);
    add_probe(app, cmds);
    add_fill(app, cmds);
    add_coxeter(app, cmds);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (app.exit(e, out, err) == 0) return kTrue;  // --help
        Json report;
        report["command"] = args;
        report["input_digest"] = nullptr;
        report["exit_code"] = static_cast<int>(kInvalid);
        report["error"] = Json{{"kind", "usage"}, {"message", e.what()}};
        out << report.dump(pretty ? 2 : -1) << '\n';
        return kInvalid;
    }

    Json report;
    report["command"] = args;
    Json body;
    int code = kTrue;
    const auto start = std::chrono::steady_clock::now();
    auto fail = [&](const char* kind, const std::string& msg, Json extra = Json::object()) {
        Json e;
        e["kind"] = kind;
        e["message"] = msg;
        e.update(extra);
        body = Json::object();
        body["error"] = std::move(e);
        err << "curvlab: " << msg << '\n';
    };
    try {
        session.max_faces = max_faces ? *max_faces : env_max_faces();
        const Command* cmd = nullptr;
        for (const auto& c : cmds)
            if (c.app->parsed()) cmd = &c;
        if (!cmd) throw InputError("no command given");
        code = cmd->handler(session, body);
    } catch (const HypothesisError& e) {
        Json extra;
        extra["vertex"] = e.vertex;
        extra["witness"] = io::to_json(e.witness);
        extra["witness_labels"] = "cube ids of the vertex link";
        fail("hypothesis", e.what(), std::move(extra));
        code = kInvalid;
    } catch (const DisplacementError& e) {
        fail("displacement", e.what());
        code = kInvalid;
    } catch (const InputError& e) {
        fail("input", e.what());
        code = kInvalid;
    } catch (const DomainError& e) {
        fail("domain", e.what());
        code = kInvalid;
    } catch (const ResourceError& e) {
        fail("resource", e.what());
        code = kResource;
    } catch (const std::bad_alloc&) {
        fail("resource", "out of memory");
        code = kResource;
    }
    report["input_digest"] = session.any_input ? Json("sha256:" + sha256_hex(session.inputs)) : Json(nullptr);
    report["exit_code"] = code;
    report.update(body);
    if (timings) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report["timings"] = Json{{"total_ms", ms}};
    }
    out << report.dump(pretty ? 2 : -1) << '\n';
    return code;
}

}  // namespace curvlab::cli
