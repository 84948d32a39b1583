#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curvlab/simplicial_complex.hpp"

namespace curvlab {

// Hub adjacent to every vertex of a full rim cycle. With a pendant t, the
// triangle {rim[0], rim[1], t} is a face and t lies outside the wheel.
struct Wheel {
    VertexId hub = 0;
    CycleSubcomplex rim;
    std::optional<VertexId> pendant;

    std::size_t k() const { return rim.length(); }
    // Sorted vertex set of the wheel, pendant included.
    std::vector<VertexId> vertex_set() const;
    std::string to_string() const;

    friend auto operator<=>(const Wheel&, const Wheel&) = default;
    friend bool operator==(const Wheel&, const Wheel&) = default;
};

enum class Condition { Flag, KLarge, LocallyKLarge, SD2Star, SD2StarLinks, WeaklySystolicLocal };

std::string condition_name(Condition c);

struct NonFlagClique {
    Simplex clique;  // pairwise adjacent, not a face
};
struct ShortCycle {
    CycleSubcomplex cycle;  // full cycle shorter than k
};
struct FourWheel {
    Wheel wheel;
};
// 5-wheel with pendant triangle that no closed 1-ball contains.
struct UncoveredPendantWheel {
    Wheel wheel;
};
// sigma spans part of S_{radius+1}(center); `intersection` lists the
// maximal faces of X_sigma cap B_radius(center) (empty if it is empty).
struct BallIntersection {
    VertexId center = 0;
    int radius = 0;
    Simplex sigma;
    std::vector<Simplex> intersection;
};

using WitnessDetail = std::variant<NonFlagClique, ShortCycle, FourWheel, UncoveredPendantWheel, BallIntersection>;

struct Witness {
    // Face whose link carries the counterexample; empty for X itself.
    std::optional<Simplex> link_of;
    WitnessDetail detail;
};

struct CurvatureReport {
    Condition condition = Condition::Flag;
    int k = 0;  // only for KLarge / LocallyKLarge
    bool verdict = true;
    std::vector<Witness> witnesses;
};

struct CheckOptions {
    std::size_t max_witnesses = 8;
};

// Exhaustive, canonical, sorted. Pendant wheels are reported once per
// (hub, rim, pendant edge, apex); the pendant edge is rim[0]-rim[1].
std::vector<Wheel> find_wheels(const SimplicialComplex& X, int k, bool with_pendant);

CurvatureReport check_flag(const SimplicialComplex& X, const CheckOptions& opt = {});
CurvatureReport check_k_large(const SimplicialComplex& X, int k, const CheckOptions& opt = {});
CurvatureReport check_sd2star(const SimplicialComplex& X, const CheckOptions& opt = {});
CurvatureReport check_sd2star_links(const SimplicialComplex& X, const CheckOptions& opt = {});
CurvatureReport is_locally_k_large(const SimplicialComplex& X, int k, const CheckOptions& opt = {});

struct SystolicOptions {
    std::size_t max_witnesses = 8;
    // Restrict the vertex condition to these centres (all vertices if empty).
    std::vector<VertexId> centers;
    // Largest i checked; negative means up to the eccentricity.
    int max_radius = -1;
};

CurvatureReport check_weakly_systolic_local(const SimplicialComplex& X, const SystolicOptions& opt = {});

// Re-derives the witness from X by the literal definitions.
bool revalidate(const SimplicialComplex& X, const Witness& w);

struct Prop29Outcome {
    bool links_side = false;        // check_sd2star_links
    bool subcomplexes_side = false;  // every full subcomplex has SD2*
    bool agree() const { return links_side == subcomplexes_side; }
};

inline constexpr std::size_t kProp29VertexBound = 16;

// Refuses (ResourceError) above `vertex_bound` vertices.
Prop29Outcome crosscheck_prop29(const SimplicialComplex& X, std::size_t vertex_bound = kProp29VertexBound);

}  // namespace curvlab
