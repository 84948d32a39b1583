#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "curvlab/homology.hpp"
#include "curvlab/simplicial_complex.hpp"

namespace curvlab {

// Finite set of points with an exact rational distance matrix. The triangle
// inequality is not required, so gap functions are admitted too.
class FiniteMetricSpace {
public:
    FiniteMetricSpace() = default;
    // Throws InputError unless ids are distinct and dist is a square,
    // symmetric, nonnegative matrix vanishing exactly on the diagonal.
    FiniteMetricSpace(std::vector<VertexId> points, std::vector<std::vector<mpq_class>> dist);

    std::span<const VertexId> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const mpq_class& d(std::size_t i, std::size_t j) const { return dist_[i][j]; }
    const std::vector<std::vector<mpq_class>>& matrix() const { return dist_; }
    // Throws InputError on an unknown id.
    std::size_t index_of(VertexId p) const;
    bool contains(VertexId p) const;
    const mpq_class& distance(VertexId p, VertexId q) const;
    bool satisfies_triangle() const { return triangle_; }
    mpq_class diameter() const;

    // Literal submatrix on the listed points, in sorted id order.
    FiniteMetricSpace restrict(std::span<const VertexId> subset) const;
    // Points within distance r of some point of `centres`.
    std::vector<VertexId> neighbourhood(std::span<const VertexId> centres, const mpq_class& r) const;

private:
    std::vector<VertexId> points_;  // sorted
    std::vector<std::vector<mpq_class>> dist_;
    bool triangle_ = true;
};

// Shortest-path metric of the 1-skeleton. Throws DomainError if X is
// disconnected.
FiniteMetricSpace graph_metric(const SimplicialComplex& X);

namespace metric_gen {

FiniteMetricSpace cycle(int n);                  // points 0..n-1
FiniteMetricSpace path(int n, const mpq_class& spacing = 1);
FiniteMetricSpace star(int leaves);              // centre 0, leaves 1..n
enum class GridMetric { L1, LInf };
// Point (col, row) has id row * cols + col.
FiniteMetricSpace grid(int cols, int rows, GridMetric metric = GridMetric::L1);
FiniteMetricSpace binary_tree(int depth);        // heap numbering from 0

// "cycle:6", "path:4", "star:5", "grid:13x13", "grid:13x13:linf", "btree:3".
// Throws InputError on anything else.
FiniteMetricSpace parse(const std::string& spec);

}  // namespace metric_gen

// Diameter function on finite subsets: either the one of a metric, or an
// explicit table where unlisted subsets have infinite diameter.
class DiameterFunction {
public:
    static DiameterFunction from_metric(FiniteMetricSpace M);
    // Throws InputError if a singleton is given a nonzero value or the table
    // is not monotone under taking faces.
    static DiameterFunction from_table(std::vector<VertexId> points, std::map<Simplex, mpq_class> table);

    std::span<const VertexId> points() const;
    // Empty when infinite.
    std::optional<mpq_class> operator()(const Simplex& s) const;
    bool is_metric() const { return metric_.has_value(); }
    const std::map<Simplex, mpq_class>& table() const { return table_; }

private:
    std::optional<FiniteMetricSpace> metric_;
    std::vector<VertexId> points_;
    std::map<Simplex, mpq_class> table_;
};

// Flag complex of the graph d <= r, truncated at max_dim (negative: none).
SimplicialComplex rips(const FiniteMetricSpace& M, const mpq_class& r, int max_dim = -1,
                       std::size_t max_faces = kNoFaceCap);
// Subsets of diameter <= eps.
SimplicialComplex vietoris(const DiameterFunction& nu, const mpq_class& eps, int max_dim = -1,
                           std::size_t max_faces = kNoFaceCap);

struct ScalePair {
    mpq_class r, R;
    // Throws DomainError unless 0 <= r <= R.
    ScalePair(mpq_class r, mpq_class R);
};

// Outcome of a homological (i;r,R)-probe. Vanishing of the map is necessary
// for the homotopical extension property, not sufficient; nothing here
// decides the latter.
struct ProbeResult {
    bool verdict = true;  // the map on H_i is zero
    InducedMap map;
    // A source cycle whose image is nonzero, when the verdict is false.
    std::optional<RationalChain> surviving;
};

// H_i(P_r(A)) -> H_i(P_R(A)) for A a subset of M. Rips complexes are cut
// at dimension i + 1, which leaves H_i unchanged.
ProbeResult homological_asphericity_probe(const FiniteMetricSpace& M, std::span<const VertexId> A, int i,
                                          const ScalePair& s, std::size_t max_faces = kNoFaceCap);

// H_i(P_r(M - L)) -> H_i(P_R(M - K)). Throws DomainError unless K is a
// subset of L.
ProbeResult complement_probe(const FiniteMetricSpace& M, std::span<const VertexId> K, std::span<const VertexId> L,
                             int i, const ScalePair& s, std::size_t max_faces = kNoFaceCap);

struct FiltrationLadder {
    int degree = 0;
    std::vector<mpq_class> radii;
    std::vector<std::size_t> ranks;  // dim H_i at each radius
    std::vector<InducedMap> maps;    // radius a -> radius a + 1
    // death[a][j]: first radius at which generator j of H_i(P_{radii[a]})
    // maps to zero; empty if it survives to the last radius.
    std::vector<std::vector<std::optional<mpq_class>>> death;
};

// Throws DomainError unless radii are strictly ascending and nonnegative.
FiltrationLadder filtration_maps(const FiniteMetricSpace& M, std::span<const mpq_class> radii, int i,
                                 bool reduced = false, std::size_t max_faces = kNoFaceCap);

// Least k such that the loop bounds over Z in the span of the k-neighbourhood
// of its vertices; infinite if it bounds in none. Throws DomainError if the
// loop is not a cycle of X.
ExtendedInt filling_radius_estimate(const SimplicialComplex& X, const CycleSubcomplex& loop);

// Integer 1-chain traversing the loop in its listed order.
std::map<Simplex, long> loop_chain(const CycleSubcomplex& loop);

}  // namespace curvlab
