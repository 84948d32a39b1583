#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "curvlab/simplicial_complex.hpp"

namespace curvlab {

// Dense integer matrix, row major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    IntMatrix transposed() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

mpz_class determinant(const IntMatrix& M);  // Bareiss; square only

struct SmithForm {
    std::vector<mpz_class> divisors;  // nonzero diagonal, d_i | d_{i+1}, all > 0
    IntMatrix U, V;                   // unimodular, U * M * V = diag(divisors)
};

// Gcd pivoting on the smallest nonzero entry. Cubic in the matrix size with
// unbounded intermediate growth; meant for matrices up to a few hundred rows.
SmithForm smith_normal_form(const IntMatrix& M);

// Column-sparse integer matrix; column j lists (row, value), rows ascending.
struct SparseIntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

    IntMatrix to_dense() const;
    std::size_t nonzeros() const;
};

// Nonzero invariant factors only. Unit pivots are eliminated sparsely first
// (int64 with overflow checks, falling back to GMP); what is left goes
// through the dense Smith form. Throws ResourceError if that remainder is
// too large to densify.
std::vector<mpz_class> smith_divisors(const SparseIntMatrix& M);

// Simplicial chain complex with lexicographic bases. basis[k] holds the
// k-faces for 0 <= k <= top; boundary[k] maps C_k -> C_{k-1}, and boundary[0]
// is the augmentation row when `reduced` (else it has zero rows).
struct ChainComplex {
    bool reduced = false;
    std::vector<std::vector<Simplex>> basis;
    std::vector<SparseIntMatrix> boundary;

    int top() const { return static_cast<int>(basis.size()) - 1; }
    bool squares_to_zero() const;
};

// Bases up to degree up_to + 1 (so that H_up_to is determined).
ChainComplex boundary_matrices(const SimplicialComplex& X, int up_to, bool reduced = false);

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<mpz_class> torsion;  // each > 1, each dividing the next

    std::string to_string() const;  // e.g. "Z^2 + Z/2"
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
    std::vector<HomologyGroup> groups;  // degree 0 .. up_to

    std::vector<std::size_t> betti() const;
    bool has_torsion() const;
};

HomologyResult homology(const SimplicialComplex& X, int up_to, bool reduced = false);

// dim_Q H^k(X; Q) for 0 <= k <= up_to, from ranks of coboundary matrices.
std::vector<std::size_t> cohomology_Q(const SimplicialComplex& X, int up_to, bool reduced = false);

// Rational k-chain, keyed by oriented (sorted) simplex.
using RationalChain = std::map<Simplex, mpq_class>;

// A basis of H_k(X; Q) by cycle representatives, with coordinates of any
// k-cycle in that basis.
class RationalHomology {
public:
    RationalHomology(const SimplicialComplex& X, int k, bool reduced = false);

    int degree() const { return k_; }
    std::size_t rank() const { return essential_.size(); }
    RationalChain representative(std::size_t i) const;
    // Throws DomainError if `z` is not a k-cycle of X.
    std::vector<mpq_class> coordinates(const RationalChain& z) const;
    bool is_boundary(const RationalChain& z) const;

private:
    using Column = std::vector<std::pair<std::uint32_t, mpq_class>>;

    std::vector<mpq_class> reduce(Column c) const;

    int k_;
    std::vector<Simplex> basis_;
    std::vector<Column> boundary_by_low_;  // reduced columns of d_{k+1}, indexed by low
    std::vector<int> boundary_low_owner_;  // low row -> index in boundary_by_low_ or -1
    std::vector<Column> cycles_;           // essential cycles, each with top entry 1
    std::vector<std::uint32_t> essential_; // top index of each essential cycle
    std::vector<int> essential_owner_;     // simplex index -> position in essential_ or -1
};

using VertexMap = std::map<VertexId, VertexId>;

struct InducedMap {
    int degree = 0;
    std::size_t source_rank = 0, target_rank = 0;
    // target_rank x source_rank matrix of H_k(f; Q) in the bases of
    // RationalHomology for source and target.
    std::vector<std::vector<mpq_class>> matrix;
    // Set when either integral group has torsion: the matrix then says
    // nothing about torsion classes.
    bool free_part_only = false;

    bool is_zero() const;
    std::size_t rank() const;
    bool is_injective_on_free_part() const { return rank() == source_rank; }
};

// Throws DomainError if f is undefined on a vertex of X or sends a face of
// X to a non-face of Y.
InducedMap induced_map(const SimplicialComplex& X, const SimplicialComplex& Y, const VertexMap& f, int k,
                       bool reduced = false);
InducedMap inclusion_map(const SimplicialComplex& X, const SimplicialComplex& Y, int k, bool reduced = false);

// Integral boundary test for an integer k-chain.
bool bounds_over_Z(const SimplicialComplex& X, int k, const std::map<Simplex, long>& chain);

}  // namespace curvlab
