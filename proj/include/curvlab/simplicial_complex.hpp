#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvlab {

using VertexId = std::int64_t;

inline constexpr std::size_t kNoFaceCap = std::numeric_limits<std::size_t>::max();

// A nonnegative integer or +infinity. Used for graph distances and filling
// radii, where disconnection is an ordinary answer rather than an error.
class ExtendedInt {
public:
    constexpr explicit ExtendedInt(int value) : value_(value) {}
    static constexpr ExtendedInt infinite() { return ExtendedInt(); }

    constexpr bool is_infinite() const { return value_ < 0; }
    int value() const;

    friend constexpr bool operator==(ExtendedInt, ExtendedInt) = default;
    friend constexpr std::strong_ordering operator<=>(ExtendedInt a, ExtendedInt b)
    {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    constexpr ExtendedInt() : value_(-1) {}
    int value_;
};

// Strictly increasing, nonempty vertex tuple. Ordering is lexicographic on
// the tuple, which is also the canonical face order of every complex.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<VertexId> sorted_vertices);
    Simplex(std::initializer_list<VertexId> sorted_vertices);

    // Sorts first; duplicates are still an input error.
    static Simplex from_unordered(std::vector<VertexId> vertices);
    // Caller guarantees the invariant.
    static Simplex unchecked(std::vector<VertexId> sorted_vertices);

    std::span<const VertexId> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    bool empty() const { return vertices_.empty(); }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(VertexId v) const;
    bool is_face_of(const Simplex& other) const;
    bool disjoint_from(const Simplex& other) const;
    Simplex without_index(std::size_t i) const;
    Simplex joined(const Simplex& other) const;  // union, must be disjoint
    Simplex minus(const Simplex& other) const;   // set difference

    std::string to_string() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::vector<VertexId> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

// Cyclically ordered vertex list, k >= 3. Canonical form starts at the
// minimal vertex and proceeds towards its smaller neighbour.
struct CycleSubcomplex {
    std::vector<VertexId> vertices;

    std::size_t length() const { return vertices.size(); }
    CycleSubcomplex canonical() const;

    friend auto operator<=>(const CycleSubcomplex&, const CycleSubcomplex&) = default;
    friend bool operator==(const CycleSubcomplex&, const CycleSubcomplex&) = default;
};

// Finite abstract simplicial complex with an explicit, downward closed face
// set. Immutable once built.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_maximal_faces(std::span<const Simplex> maximal,
                                                std::size_t max_faces = kNoFaceCap);
    static SimplicialComplex from_maximal_faces(const std::vector<std::vector<VertexId>>& maximal,
                                                std::size_t max_faces = kNoFaceCap);
    // Face set must already be downward closed; validated.
    static SimplicialComplex from_faces(std::vector<Simplex> faces);
    // Faces are sorted and closed; only the caller's word for it.
    static SimplicialComplex from_closed_faces_unchecked(std::vector<Simplex> sorted_faces);

    std::span<const VertexId> vertices() const { return vertices_; }
    std::span<const Simplex> faces() const { return faces_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t face_count() const { return faces_.size(); }
    std::size_t face_count(int dim) const;
    std::vector<std::size_t> f_vector() const;
    std::vector<Simplex> faces_of_dim(int dim) const;
    std::vector<Simplex> maximal_faces() const;
    int dimension() const { return static_cast<int>(dim_counts_.size()) - 1; }
    bool empty() const { return vertices_.empty(); }

    bool contains(const Simplex& s) const;
    bool has_vertex(VertexId v) const;
    std::optional<std::size_t> vertex_index(VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;

    std::string to_string() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.faces_ == b.faces_;
    }

private:
    void index();

    std::vector<VertexId> vertices_;
    std::vector<Simplex> faces_;
    std::vector<std::vector<VertexId>> neighbors_;
    std::vector<std::size_t> dim_counts_;
};

// Clique complex of the graph on `vertices` with edge predicate `adjacent`,
// truncated at `max_dim` (negative = no truncation).
SimplicialComplex clique_complex(std::span<const VertexId> vertices,
                                 const std::function<bool(VertexId, VertexId)>& adjacent,
                                 int max_dim = -1, std::size_t max_faces = kNoFaceCap);

SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma);
SimplicialComplex span(const SimplicialComplex& X, std::span<const VertexId> A);
bool is_subcomplex(const SimplicialComplex& Y, const SimplicialComplex& X);
bool is_full_subcomplex(const SimplicialComplex& X, const SimplicialComplex& Y);

// Minimal clique of the 1-skeleton that is not a face, if any.
std::optional<Simplex> non_flag_witness(const SimplicialComplex& X);
bool is_flag(const SimplicialComplex& X);

// Full j-cycles with 4 <= j < k, canonical and sorted.
std::vector<CycleSubcomplex> full_cycles_below(const SimplicialComplex& X, int k);
bool is_k_large(const SimplicialComplex& X, int k);

bool is_connected(const SimplicialComplex& X);
ExtendedInt graph_distance(const SimplicialComplex& X, VertexId u, VertexId v);
// Distance from v to every vertex, indexed like X.vertices(); -1 = unreachable.
std::vector<int> distances_from(const SimplicialComplex& X, VertexId v);
SimplicialComplex ball(const SimplicialComplex& X, VertexId v, int radius);
SimplicialComplex sphere(const SimplicialComplex& X, VertexId v, int radius);

// True iff consecutive vertices are adjacent and all vertices distinct;
// `full` additionally demands no chords.
bool is_cycle_in(const SimplicialComplex& X, const CycleSubcomplex& c, bool full);

SimplicialComplex cone(const SimplicialComplex& X, VertexId apex);

// Vertex bijection X -> Y carrying faces onto faces, if one exists.
std::optional<std::vector<std::pair<VertexId, VertexId>>> find_isomorphism(
    const SimplicialComplex& X, const SimplicialComplex& Y);

}  // namespace curvlab
