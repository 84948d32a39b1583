#pragma once

#include <json.hpp>
#include <string>

#include "curvlab/coxeter.hpp"
#include "curvlab/cubical.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/homology.hpp"
#include "curvlab/ripslab.hpp"
#include "curvlab/simplicial_complex.hpp"

// JSON formats for inputs and reports. Object keys keep insertion order, so
// a value serializes to the same bytes every time.
namespace curvlab::io {

using Json = nlohmann::ordered_json;

// Throws InputError if the file cannot be read or is not valid JSON.
std::string read_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& source);

// {"type":"simplicial","maximal_simplices":[[...],...]}, lexicographic.
Json to_json(const SimplicialComplex& X);
SimplicialComplex simplicial_from_json(const Json& j, std::size_t max_faces = kNoFaceCap);

// {"type":"cubical","cubes":[{"dim":d,"vertices":[...]},...]}, maximal
// cubes only, vertices in binary-index order.
Json to_json(const CubicalComplex& Y);
CubicalComplex cubical_from_json(const Json& j);

// {"type":"metric","points":[...],"dist":[["p/q",...],...]}; plain
// integers are accepted for entries.
Json to_json(const FiniteMetricSpace& M);
FiniteMetricSpace metric_from_json(const Json& j);
std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& s);  // "p/q" or "p"

// {"table":[[...]],"gen_images":[...]} or {"gen_permutations":[[...],...]},
// either with an optional "order" that must match the generated group.
FiniteQuotientMap quotient_map_from_json(const CoxeterSystem& W, const Json& j, std::size_t cap = kDefaultBallCap);

Json to_json(const Simplex& s);
Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);
Json to_json(const CurvatureReport& r);
CurvatureReport curvature_report_from_json(const Json& j);
Json to_json(const LinkVerdict& v);
Json to_json(const HomologyResult& h);
Json to_json(const InducedMap& f);
Json to_json(const RationalChain& c);
Json to_json(const ProbeResult& p);
Json to_json(const FiltrationLadder& l);

Json to_json(const CoxeterSystem& W, const DisplacementReport& d);
Json to_json(const QuotientVerdicts& q);
// The quotient itself is left out; it is written separately.
Json to_json(const CoxeterSystem& W, const Certificate51& c);
Json to_json(const Prop27Outcome& p);

}  // namespace curvlab::io
