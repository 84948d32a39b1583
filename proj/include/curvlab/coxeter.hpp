#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curvlab/cubical.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/simplicial_complex.hpp"

namespace curvlab {

// Word over the generators, each letter a generator index (position of the
// nerve vertex in sorted order).
using Word = std::vector<std::uint32_t>;

// Right-angled Coxeter system with the given flag nerve: generators are the
// nerve vertices, and two distinct generators commute iff they span an edge.
class CoxeterSystem {
public:
    // Throws DomainError if the nerve is empty or not flag.
    explicit CoxeterSystem(SimplicialComplex nerve);

    const SimplicialComplex& nerve() const { return nerve_; }
    std::size_t rank() const { return gens_.size(); }
    VertexId generator(std::uint32_t i) const { return gens_[i]; }
    std::uint32_t index_of(VertexId s) const;  // InputError if not a generator
    bool commute(std::uint32_t s, std::uint32_t t) const { return commute_[s * gens_.size() + t] != 0; }
    // Faces of the nerve as sorted index lists; maximal ones separately.
    const std::vector<std::vector<std::uint32_t>>& cliques() const { return cliques_; }
    const std::vector<std::vector<std::uint32_t>>& maximal_cliques() const { return maximal_; }
    std::size_t max_clique_size() const;

    // Letters "a", "b", ... for up to 26 generators, otherwise (or when
    // ids are wanted) dot-separated generator ids. The empty word is "".
    std::string format(const Word& w) const;
    // Accepts both forms. Throws InputError on an unknown letter.
    Word parse(const std::string& s) const;

private:
    SimplicialComplex nerve_;
    std::vector<VertexId> gens_;
    std::vector<char> commute_;
    std::vector<std::vector<std::uint32_t>> cliques_, maximal_;
};

// Lexicographically least reduced word representing w. Throws InputError on
// a letter out of range.
Word normal_form(const CoxeterSystem& W, const Word& w);
// nf(w * s) for w already in normal form.
Word multiply_generator(const CoxeterSystem& W, const Word& w, std::uint32_t s);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

inline constexpr std::size_t kDefaultBallCap = 2'000'000;

struct CayleyBall {
    int radius = 0;
    // By length, then lexicographically; element 0 is the identity.
    std::vector<Word> elements;
    struct Edge {
        std::size_t from, to;  // to = from * s, from shorter
        std::uint32_t generator;
    };
    std::vector<Edge> edges;

    std::optional<std::size_t> find(const Word& w) const;

private:
    friend CayleyBall cayley_ball(const CoxeterSystem&, int, std::size_t);
    std::map<Word, std::size_t> index_;
};

// Throws ResourceError once more than `cap` elements are found.
CayleyBall cayley_ball(const CoxeterSystem& W, int radius, std::size_t cap = kDefaultBallCap);

struct DavisBall {
    int radius = 0;
    CubicalComplex complex;
    // Vertex v of the complex is the group element elements[v].
    std::vector<Word> elements;
    VertexId identity = 0;
};

// Cubes are the cosets wW_T, T a clique, meeting the word-length ball of
// the given radius. Vertex links at elements of length <= radius are
// checked against the nerve on construction.
DavisBall davis_ball(const CoxeterSystem& W, int radius, std::size_t cap = kDefaultBallCap);

// Homomorphism from W onto a finite group F, kept as the right action of
// each generator image on the elements of F. Element 0 is the identity.
class FiniteQuotientMap {
public:
    // table[i][j] = index of the product i*j; gen_images[s] for each
    // generator in index order. Throws InputError if the table is not a
    // group, DomainError if an image is not a nontrivial involution or two
    // commuting generators have non-commuting images.
    static FiniteQuotientMap from_table(const CoxeterSystem& W, const std::vector<std::vector<std::int64_t>>& table,
                                        const std::vector<std::int64_t>& gen_images);
    // Generator images as permutations of {0..n-1}; F is the group they
    // generate, with x*s meaning x first.
    static FiniteQuotientMap from_permutations(const CoxeterSystem& W,
                                               const std::vector<std::vector<std::int64_t>>& perms,
                                               std::size_t cap = kDefaultBallCap);

    std::size_t order() const { return right_.empty() ? 0 : right_[0].size(); }
    std::size_t right(std::size_t x, std::uint32_t s) const { return right_[s][x]; }
    std::size_t image(const Word& w) const;  // from the identity
    std::size_t image(std::size_t x, const Word& w) const;

private:
    void check_relations(const CoxeterSystem& W) const;
    std::vector<std::vector<std::uint32_t>> right_;  // [generator][element]
};

class DisplacementError : public DomainError {
public:
    DisplacementError(const std::string& what, Word kernel_element)
        : DomainError(what), kernel_element(std::move(kernel_element))
    {
    }
    Word kernel_element;
};

struct DisplacementReport {
    int m = 0;
    bool verdict = true;       // phi is injective on the ball
    std::size_t ball_size = 0;  // vertices of Th(Sigma) within m of the identity
    // Two ball elements with the same image, and the kernel element between
    // them (the shorter-lex of g^-1 h and h^-1 g).
    std::optional<Word> first, second, kernel_element;
};

// Injectivity of phi on the radius-m ball around the identity of Th(Sigma);
// true certifies that ker phi moves every vertex more than m.
DisplacementReport verify_displacement(const CoxeterSystem& W, const FiniteQuotientMap& phi, int m,
                                       std::size_t cap = kDefaultBallCap);

inline constexpr int kQuotientDisplacement = 4;

// ker(phi) \ Th(Sigma): vertices are the elements of F, faces the sets
// {f phi(u) : u in W_T}. Throws DisplacementError unless
// verify_displacement(W, phi, kQuotientDisplacement) holds.
SimplicialComplex quotient_thickening(const CoxeterSystem& W, const FiniteQuotientMap& phi,
                                      std::size_t max_faces = kNoFaceCap);

struct Certificate51 {
    // nerve side
    bool nerve_five_large = false;
    bool nerve_sd2star_links = false;
    // Degree d with reduced H^d(nerve; Q) != 0, if there is one.
    std::optional<int> degree;
    std::size_t nerve_rank = 0;
    DisplacementReport displacement;
    // quotient side, all recomputable from `quotient` alone
    SimplicialComplex quotient;
    bool five_large = false;
    bool six_large = false;
    bool sd2star_links = false;
    std::size_t quotient_rank = 0;  // dim reduced H^{d+1}(quotient; Q)
    // quotient_rank != 0; empty when the nerve has no nonzero degree
    std::optional<bool> cohomology_prediction;
    std::optional<int> vcd_lower_bound;  // d + 2, quoted not computed
    std::vector<Witness> witnesses;      // from failed quotient checks

    bool all_verdicts_true() const;
};

struct Step51Options {
    // Degree d to carry; defaults to the largest with reduced H^d != 0.
    std::optional<int> degree;
    std::size_t max_faces = kNoFaceCap;
};

// Throws DomainError if the nerve is not 5-large with SD2* links, and
// DisplacementError if phi fails the displacement check.
Certificate51 section51_step(const SimplicialComplex& nerve, const FiniteQuotientMap& phi,
                             const Step51Options& opt = {});
// Same overload for a system already built.
Certificate51 section51_step(const CoxeterSystem& W, const FiniteQuotientMap& phi, const Step51Options& opt = {});

struct QuotientVerdicts {
    bool five_large = false;
    bool six_large = false;
    bool sd2star_links = false;
    std::size_t rank = 0;  // dim reduced H^{degree}(X'; Q)
    std::vector<Witness> witnesses;
};

// The quotient-side checks of a certificate, from X' alone.
QuotientVerdicts recheck_quotient(const SimplicialComplex& X, std::optional<int> degree);

struct Prop27Outcome {
    int davis_radius = 0;
    int checked_radius = -1;  // largest i checked at the identity; -1: none
    CurvatureReport report;
};

// Vertex condition of weak systolicity at the identity of Th(davis_ball(R)),
// for the radii i with c(i+1) <= R (c = largest clique size), where the
// truncated ball agrees with the whole Davis complex.
Prop27Outcome prop27_harness(const CoxeterSystem& W, int davis_radius, std::size_t cap = kDefaultBallCap);

}  // namespace curvlab
