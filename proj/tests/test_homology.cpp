#include <doctest.h>

#include <random>

#include "curvlab/catalog.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/homology.hpp"
#include "helpers.hpp"
#include "snf_oracle.hpp"

using namespace curvlab;

namespace {

std::vector<mpz_class> z(std::initializer_list<long> v)
{
    std::vector<mpz_class> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

IntMatrix diag(std::size_t m, std::size_t n, const std::vector<mpz_class>& d)
{
    IntMatrix D(m, n);
    for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
    return D;
}

void check_smith(const IntMatrix& M)
{
    const auto s = smith_normal_form(M);
    CHECK(s.U * M * s.V == diag(M.rows(), M.cols(), s.divisors));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    for (std::size_t i = 0; i < s.divisors.size(); ++i) {
        CHECK(s.divisors[i] > 0);
        if (i + 1 < s.divisors.size()) CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
    }
}

oracle::Mat to_mat(const IntMatrix& M)
{
    oracle::Mat m(M.rows(), std::vector<long>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) m[i][j] = M(i, j).get_si();
    return m;
}

// Boundary matrix d_k built straight from the face set.
oracle::Mat oracle_boundary(const oracle::FaceSet& F, std::size_t k)
{
    std::vector<oracle::Face> rows, cols;
    for (const auto& f : F) {
        if (f.size() == k) rows.push_back(f);
        if (f.size() == k + 1) cols.push_back(f);
    }
    oracle::Mat m(rows.size(), std::vector<long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) {
            auto face = cols[j];
            face.erase(face.begin() + static_cast<long>(i));
            auto r = std::find(rows.begin(), rows.end(), face) - rows.begin();
            m[static_cast<std::size_t>(r)][j] = (i % 2 == 0) ? 1 : -1;
        }
    return m;
}

std::size_t count_of_size(const oracle::FaceSet& F, std::size_t n)
{
    std::size_t c = 0;
    for (const auto& f : F) c += f.size() == n;
    return c;
}

std::vector<std::size_t> oracle_betti(const SimplicialComplex& X, int up_to)
{
    const auto F = testutil::faces_of(X);
    std::vector<std::size_t> b;
    for (int k = 0; k <= up_to; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        const std::size_t n = count_of_size(F, kk + 1);
        const std::size_t r_lo = k == 0 ? 0 : oracle::rank_q(oracle_boundary(F, kk));
        const std::size_t r_hi = oracle::rank_q(oracle_boundary(F, kk + 1));
        b.push_back(n - r_lo - r_hi);
    }
    return b;
}

std::vector<std::vector<long>> random_matrix(std::mt19937_64& rng, int m, int n, int lo, int hi, double density)
{
    std::uniform_int_distribution<int> val(lo, hi);
    std::bernoulli_distribution keep(density);
    std::vector<std::vector<long>> out(m, std::vector<long>(n, 0));
    for (auto& r : out)
        for (auto& v : r)
            if (keep(rng)) v = val(rng);
    return out;
}

IntMatrix from_rows(const std::vector<std::vector<long>>& rows)
{
    IntMatrix M(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) M(i, j) = rows[i][j];
    return M;
}

SparseIntMatrix to_sparse(const std::vector<std::vector<long>>& rows)
{
    SparseIntMatrix S;
    S.rows = rows.size();
    S.cols = rows.empty() ? 0 : rows[0].size();
    S.columns.resize(S.cols);
    for (std::size_t j = 0; j < S.cols; ++j)
        for (std::size_t i = 0; i < S.rows; ++i)
            if (rows[i][j] != 0) S.columns[j].emplace_back(static_cast<std::uint32_t>(i), rows[i][j]);
    return S;
}

}  // namespace

TEST_CASE("Smith normal form examples")
{
    CHECK(smith_normal_form(IntMatrix::identity(3)).divisors == z({1, 1, 1}));
    CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).divisors == z({2, 4}));
    CHECK(oracle::invariant_factors({{2, 4}, {6, 8}}) == z({2, 4}));
    CHECK(smith_normal_form(IntMatrix(3, 4)).divisors.empty());
    check_smith(IntMatrix{{2, 4}, {6, 8}});
    check_smith(IntMatrix(2, 3));
    check_smith(IntMatrix{{0, 0, 3}, {0, 6, 0}, {9, 0, 0}});
}

TEST_CASE("Smith normal form agrees with determinantal divisors")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        const int m = dim(rng), n = dim(rng);
        auto rows = random_matrix(rng, m, n, -6, 6, 0.7);
        const IntMatrix M = from_rows(rows);
        check_smith(M);
        const auto expected = oracle::invariant_factors(rows);
        CHECK(smith_normal_form(M).divisors == expected);
        CHECK(smith_divisors(to_sparse(rows)) == expected);
    }
}

TEST_CASE("sparse divisors agree with the dense Smith form on larger matrices")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        auto rows = random_matrix(rng, 30, 25, -2, 2, 0.12);
        CHECK(smith_divisors(to_sparse(rows)) == smith_normal_form(from_rows(rows)).divisors);
    }
    // entries that overflow 64 bits during elimination
    std::vector<std::vector<long>> big(6, std::vector<long>(6, 0));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) big[i][j] = (i == j) ? 1 : (1L << 40) + i * 7 + j;
    CHECK(smith_divisors(to_sparse(big)) == smith_normal_form(from_rows(big)).divisors);
}

TEST_CASE("determinant")
{
    CHECK(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("boundary matrices")
{
    auto edge = boundary_matrices(catalog::full_simplex(2), 1);
    REQUIRE(edge.boundary.size() == 2);
    CHECK(edge.boundary[1].to_dense() == IntMatrix{{-1}, {1}});

    for (const auto& [name, X] : catalog::standard()) {
        CAPTURE(name);
        for (bool reduced : {false, true}) {
            auto cc = boundary_matrices(X, 3, reduced);
            CHECK(cc.squares_to_zero());
            const auto F = testutil::faces_of(X);
            for (int k = 1; k <= cc.top(); ++k)
                CHECK(to_mat(cc.boundary[static_cast<std::size_t>(k)].to_dense()) ==
                      oracle_boundary(F, static_cast<std::size_t>(k)));
        }
    }

    auto octa = boundary_matrices(catalog::octahedron(), 2);
    CHECK(smith_divisors(octa.boundary[1]).size() == 5);
    CHECK(smith_divisors(octa.boundary[2]).size() == 7);
    CHECK(oracle::rank_q(to_mat(octa.boundary[2].to_dense())) == 7);
}

TEST_CASE("homology of the catalog")
{
    auto c4 = homology(catalog::cycle(4), 1);
    CHECK(c4.betti() == std::vector<std::size_t>{1, 1});

    auto octa = homology(catalog::octahedron(), 2);
    CHECK(octa.betti() == std::vector<std::size_t>{1, 0, 1});
    CHECK_FALSE(octa.has_torsion());

    auto rp2 = homology(catalog::projective_plane(), 2);
    CHECK(rp2.groups[0].to_string() == "Z");
    CHECK(rp2.groups[1].to_string() == "Z/2");
    CHECK(rp2.groups[2].to_string() == "0");
    const auto d2 = boundary_matrices(catalog::projective_plane(), 2).boundary[2].to_dense();
    auto inv = oracle::invariant_factors(to_mat(d2));
    CHECK(inv.back() == 2);
    CHECK(std::count(inv.begin(), inv.end(), mpz_class(1)) == 9);

    auto t = homology(catalog::torus(3, 3), 2);
    CHECK(t.betti() == std::vector<std::size_t>{1, 2, 1});
    CHECK_FALSE(t.has_torsion());

    CHECK(homology(catalog::two_disjoint_edges(), 1).betti() == std::vector<std::size_t>{2, 0});
    CHECK(homology(catalog::two_disjoint_edges(), 1, true).betti() == std::vector<std::size_t>{1, 0});
    CHECK(homology(catalog::full_simplex(4), 3).betti() == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("integral homology matches oracle ranks, cohomology and Euler characteristic")
{
    auto check = [](const SimplicialComplex& X) {
        const int top = std::max(X.dimension(), 0);
        const auto h = homology(X, top);
        CHECK(h.betti() == oracle_betti(X, top));
        CHECK(cohomology_Q(X, top) == h.betti());
        long chi_faces = 0, chi_betti = 0;
        const auto f = X.f_vector();
        for (std::size_t k = 0; k < f.size(); ++k) chi_faces += (k % 2 ? -1L : 1L) * static_cast<long>(f[k]);
        for (std::size_t k = 0; k < h.groups.size(); ++k)
            chi_betti += (k % 2 ? -1L : 1L) * static_cast<long>(h.groups[k].betti);
        CHECK(chi_faces == chi_betti);
        for (const auto& g : h.groups)
            for (std::size_t i = 0; i < g.torsion.size(); ++i) {
                CHECK(g.torsion[i] > 1);
                if (i + 1 < g.torsion.size()) CHECK(g.torsion[i + 1] % g.torsion[i] == 0);
            }
    };
    for (const auto& [name, X] : catalog::standard()) {
        CAPTURE(name);
        check(X);
    }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) check(testutil::random_flag(rng, 9, 0.55));
}

TEST_CASE("cones are acyclic")
{
    for (const auto& [name, X] : catalog::standard()) {
        CAPTURE(name);
        const auto C = cone(X, 1000);
        const auto h = homology(C, C.dimension());
        CHECK(h.groups[0].to_string() == "Z");
        for (std::size_t k = 1; k < h.groups.size(); ++k) CHECK(h.groups[k].to_string() == "0");
        const auto q = cohomology_Q(C, C.dimension());
        for (std::size_t k = 1; k < q.size(); ++k) CHECK(q[k] == 0);
    }
}

TEST_CASE("rational cohomology examples")
{
    CHECK(cohomology_Q(catalog::cycle(5), 1)[1] == 1);
    CHECK(cohomology_Q(catalog::octahedron(), 2)[2] == 1);
    CHECK(cohomology_Q(catalog::projective_plane(), 2) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("rational homology bases")
{
    RationalHomology h2(catalog::octahedron(), 2);
    REQUIRE(h2.rank() == 1);
    const auto fundamental = h2.representative(0);
    CHECK(fundamental.size() == 8);
    CHECK(h2.coordinates(fundamental) == std::vector<mpq_class>{1});

    RationalHomology h1(catalog::full_simplex(3), 1);
    CHECK(h1.rank() == 0);
    RationalChain tri{{Simplex({1, 2}), 1}, {Simplex({2, 3}), 1}, {Simplex({1, 3}), -1}};
    CHECK(h1.is_boundary(tri));
    RationalChain broken{{Simplex({1, 2}), 1}};
    CHECK_THROWS_AS(h1.coordinates(broken), DomainError);

    RationalHomology c6(catalog::cycle(6), 1);
    REQUIRE(c6.rank() == 1);
    RationalChain loop;
    for (int i = 1; i <= 6; ++i) {
        const VertexId a = i, b = i % 6 + 1;
        loop[Simplex::from_unordered({a, b})] = a < b ? 1 : -1;
    }
    CHECK(abs(c6.coordinates(loop)[0]) == 1);
    // any two representatives of one class differ by a boundary
    RationalHomology t(catalog::torus(3, 3), 1);
    CHECK(t.rank() == 2);
}

TEST_CASE("induced maps")
{
    const auto octa = catalog::octahedron();
    auto id = inclusion_map(octa, octa, 2);
    REQUIRE(id.matrix.size() == 1);
    CHECK(id.matrix[0][0] == 1);
    CHECK(id.is_injective_on_free_part());

    auto t = catalog::torus(3, 3);
    auto idt = inclusion_map(t, t, 1);
    CHECK(idt.rank() == 2);
    CHECK(idt.matrix[0][0] == 1);
    CHECK(idt.matrix[1][0] == 0);

    // C6 inside its 2-neighbourhood complex
    std::vector<VertexId> pts{0, 1, 2, 3, 4, 5};
    auto cyc_d = [](VertexId a, VertexId b) {
        const long d = std::abs(a - b);
        return std::min(d, 6 - d);
    };
    auto P1 = clique_complex(pts, [&](VertexId a, VertexId b) { return cyc_d(a, b) <= 1; });
    auto P2 = clique_complex(pts, [&](VertexId a, VertexId b) { return cyc_d(a, b) <= 2; });
    auto m = inclusion_map(P1, P2, 1);
    CHECK(m.source_rank == 1);
    CHECK(m.target_rank == 0);
    CHECK(m.is_zero());
    CHECK_FALSE(m.is_injective_on_free_part());

    const auto c4 = catalog::cycle(4);
    const auto pt = catalog::full_simplex(1);
    VertexMap collapse{{1, 1}, {2, 1}, {3, 1}, {4, 1}};
    auto cm = induced_map(c4, pt, collapse, 1);
    CHECK(cm.is_zero());
    CHECK(cm.source_rank == 1);

    VertexMap bad{{1, 1}, {2, 2}, {3, 3}, {4, 4}};
    CHECK_THROWS_AS(induced_map(c4, catalog::path(4), bad, 1), DomainError);
    VertexMap partial{{1, 1}};
    CHECK_THROWS_AS(induced_map(c4, c4, partial, 1), DomainError);

    auto rp = catalog::projective_plane();
    CHECK(inclusion_map(rp, rp, 1).free_part_only);

    // reduced H_0 of three far points
    auto three = SimplicialComplex::from_maximal_faces({{1}, {2}, {3}});
    auto r0 = inclusion_map(three, three, 0, true);
    CHECK(r0.rank() == 2);
}

TEST_CASE("integral boundary test")
{
    const auto rp = catalog::projective_plane();
    std::map<Simplex, long> loop{{Simplex({1, 2}), 1}, {Simplex({2, 3}), 1}, {Simplex({1, 3}), -1}};
    CHECK_FALSE(bounds_over_Z(rp, 1, loop));
    for (auto& [s, v] : loop) v *= 2;
    CHECK(bounds_over_Z(rp, 1, loop));

    const auto tri = catalog::full_simplex(3);
    std::map<Simplex, long> edge_loop{{Simplex({1, 2}), 1}, {Simplex({2, 3}), 1}, {Simplex({1, 3}), -1}};
    CHECK(bounds_over_Z(tri, 1, edge_loop));
    CHECK_FALSE(bounds_over_Z(catalog::hollow_triangle(), 1, edge_loop));
    CHECK_THROWS_AS(bounds_over_Z(catalog::hollow_triangle(), 1, {{Simplex({1, 9}), 1}}), DomainError);
}
