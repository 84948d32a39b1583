#include <doctest.h>

#include <random>

#include "curvlab/catalog.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/simplicial_complex.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace curvlab;
using testutil::faces_of;

namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> v) { return v; }

}  // namespace

TEST_CASE("simplex validation")
{
    CHECK_THROWS_AS(Simplex({2, 1}), InputError);
    CHECK_THROWS_AS(Simplex({1, 1}), InputError);
    CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), InputError);
    CHECK_THROWS_AS(Simplex::from_unordered({3, 1, 3}), InputError);
    CHECK(Simplex::from_unordered({3, 1, 2}) == Simplex({1, 2, 3}));
    CHECK(Simplex({1, 3}).is_face_of(Simplex({1, 2, 3})));
    CHECK(Simplex({1, 2, 3}).to_string() == "[1,2,3]");
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_faces({{1, 3, 2}}), InputError);
}

TEST_CASE("closure of maximal faces")
{
    auto tri = SimplicialComplex::from_maximal_faces({{1, 2, 3}});
    CHECK(tri.face_count() == 7);
    CHECK(tri.f_vector() == std::vector<std::size_t>{3, 3, 1});

    auto hollow = catalog::hollow_triangle();
    CHECK(hollow.f_vector() == std::vector<std::size_t>{3, 3});

    auto octa = catalog::octahedron();
    CHECK(faces_of(octa) == oracle::closure(testutil::maximal_lists(octa)));
    CHECK(octa.f_vector() == std::vector<std::size_t>{6, 12, 8});
}

TEST_CASE("from_maximal_faces is idempotent on the catalog")
{
    for (const auto& [name, X] : catalog::standard()) {
        CAPTURE(name);
        auto m = X.maximal_faces();
        CHECK(SimplicialComplex::from_maximal_faces(m) == X);
        CHECK(faces_of(X) == oracle::closure(testutil::maximal_lists(X)));
    }
}

TEST_CASE("face cap")
{
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_faces({{1, 2, 3, 4, 5, 6}}, 10), ResourceError);
}

TEST_CASE("from_faces rejects non-closed sets")
{
    CHECK_THROWS_AS(SimplicialComplex::from_faces({Simplex({1}), Simplex({1, 2})}), InputError);
}

TEST_CASE("link")
{
    auto tri = catalog::full_simplex(3);
    CHECK(link(tri, Simplex({1})) == SimplicialComplex::from_maximal_faces({{2, 3}}));

    auto hollow = catalog::hollow_triangle();
    auto lk = link(hollow, Simplex({1}));
    CHECK(lk == SimplicialComplex::from_maximal_faces({{2}, {3}}));

    auto octa = catalog::octahedron();
    // neighbours of 1 are 3,4,5,6 with 3-4 and 5-6 missing
    auto l1 = link(octa, Simplex({1}));
    CHECK(l1 == SimplicialComplex::from_maximal_faces({{3, 5}, {3, 6}, {4, 5}, {4, 6}}));

    CHECK_THROWS_AS(link(octa, Simplex({1, 2})), DomainError);
}

TEST_CASE("link agrees with the oracle and preserves flagness")
{
    for (const auto& [name, X] : catalog::standard()) {
        CAPTURE(name);
        auto F = faces_of(X);
        for (const auto& s : X.faces()) {
            auto L = link(X, s);
            CHECK(faces_of(L) == oracle::link(F, oracle::Face(s.vertices().begin(), s.vertices().end())));
            if (is_flag(X)) CHECK(is_flag(L));
        }
    }
}

TEST_CASE("span and full subcomplexes")
{
    auto tri = catalog::full_simplex(3);
    CHECK(span(tri, ids({1, 2})) == SimplicialComplex::from_maximal_faces({{1, 2}}));
    CHECK(is_full_subcomplex(tri, SimplicialComplex::from_maximal_faces({{1, 2}})));
    CHECK_FALSE(is_full_subcomplex(tri, catalog::hollow_triangle()));
    CHECK_THROWS_AS(span(tri, ids({1, 9})), DomainError);
    CHECK_THROWS_AS(is_full_subcomplex(tri, catalog::cycle(4)), DomainError);

    auto octa = catalog::octahedron();
    CHECK(span(octa, ids({1, 2})) == SimplicialComplex::from_maximal_faces({{1}, {2}}));
    auto equator = SimplicialComplex::from_maximal_faces({{3, 5}, {3, 6}, {4, 5}, {4, 6}});
    CHECK(is_full_subcomplex(octa, equator));

    for (const auto& [name, X] : catalog::standard()) {
        CAPTURE(name);
        CHECK(span(X, X.vertices()) == X);
    }
}

TEST_CASE("flagness")
{
    CHECK_FALSE(is_flag(catalog::hollow_triangle()));
    CHECK(non_flag_witness(catalog::hollow_triangle()) == Simplex({1, 2, 3}));
    CHECK(is_flag(catalog::cycle(4)));
    CHECK(is_flag(catalog::octahedron()));
    for (const auto& [name, X] : catalog::standard()) {
        CAPTURE(name);
        CHECK(is_flag(X) == oracle::is_flag(faces_of(X)));
    }
}

TEST_CASE("full cycles")
{
    auto c4 = full_cycles_below(catalog::cycle(4), 6);
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].vertices == ids({1, 2, 3, 4}));

    CHECK(full_cycles_below(catalog::full_simplex(5), 100).empty());

    auto eq = full_cycles_below(catalog::octahedron(), 5);
    REQUIRE(eq.size() == 3);
    CHECK(eq[0].vertices == ids({1, 3, 2, 4}));
    CHECK(eq[1].vertices == ids({1, 5, 2, 6}));
    CHECK(eq[2].vertices == ids({3, 5, 4, 6}));
    for (const auto& c : eq) CHECK(is_cycle_in(catalog::octahedron(), c, true));

    CHECK_THROWS_AS(full_cycles_below(catalog::cycle(5), 3), DomainError);
}

TEST_CASE("full cycles agree with subset enumeration")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto X = testutil::random_flag(rng, 8, 0.45);
        auto cycles = full_cycles_below(X, 9);
        auto expected = oracle::full_cycle_vertex_sets(faces_of(X), 9);
        std::set<oracle::Face> got;
        for (const auto& c : cycles) {
            auto v = c.vertices;
            std::sort(v.begin(), v.end());
            got.insert(v);
            CHECK(c == c.canonical());
        }
        // an induced cycle is determined by its vertex set
        CHECK(got.size() == cycles.size());
        CHECK(got == std::set<oracle::Face>(expected.begin(), expected.end()));
    }
}

TEST_CASE("k-largeness")
{
    auto c6 = catalog::cycle(6);
    CHECK(is_k_large(c6, 6));
    CHECK_FALSE(is_k_large(c6, 7));
    CHECK_FALSE(is_k_large(catalog::octahedron(), 5));
    for (int k : {4, 5, 9, 40}) CHECK(is_k_large(catalog::full_simplex(4), k));
    CHECK_FALSE(is_k_large(catalog::hollow_triangle(), 4));

    for (const auto& [name, X] : catalog::standard()) {
        CAPTURE(name);
        for (int k = 5; k <= 8; ++k)
            if (is_k_large(X, k))
                for (int j = 4; j <= k; ++j) CHECK(is_k_large(X, j));
    }
}

TEST_CASE("distances, balls and spheres")
{
    auto c6 = catalog::cycle(6);
    CHECK(graph_distance(c6, 1, 4) == ExtendedInt(3));
    CHECK(graph_distance(c6, 2, 2) == ExtendedInt(0));
    auto two = catalog::two_disjoint_edges();
    CHECK(graph_distance(two, 1, 3).is_infinite());
    CHECK(graph_distance(two, 1, 3).to_string() == "inf");
    CHECK_THROWS_AS(graph_distance(two, 1, 3).value(), DomainError);

    CHECK(find_isomorphism(ball(c6, 1, 1), catalog::path(3)).has_value());
    CHECK(sphere(c6, 1, 3) == SimplicialComplex::from_maximal_faces({{4}}));
    auto octa = catalog::octahedron();
    CHECK(sphere(octa, 1, 1) == SimplicialComplex::from_maximal_faces({{3, 5}, {3, 6}, {4, 5}, {4, 6}}));

    for (const auto& [name, X] : catalog::standard()) {
        CAPTURE(name);
        for (VertexId v : X.vertices()) {
            for (int i = 0; i < 4; ++i) {
                auto b = ball(X, v, i);
                auto s = sphere(X, v, i + 1);
                std::vector<VertexId> u(b.vertices().begin(), b.vertices().end());
                u.insert(u.end(), s.vertices().begin(), s.vertices().end());
                std::sort(u.begin(), u.end());
                auto b1 = ball(X, v, i + 1);
                CHECK(u == std::vector<VertexId>(b1.vertices().begin(), b1.vertices().end()));
                CHECK(is_full_subcomplex(X, b));
            }
        }
    }
}

TEST_CASE("cone and isomorphism")
{
    auto c = cone(catalog::cycle(6), 0);
    CHECK(find_isomorphism(c, catalog::wheel(6)).has_value());
    CHECK_FALSE(find_isomorphism(catalog::wheel(5), catalog::wheel(6)).has_value());
    CHECK_FALSE(find_isomorphism(catalog::cycle(6), catalog::two_disjoint_edges()).has_value());
    CHECK_THROWS_AS(cone(catalog::cycle(6), 3), DomainError);
    // octahedron is K_{2,2,2}: the 4-cycle link of every vertex
    auto octa = catalog::octahedron();
    for (VertexId v : octa.vertices())
        CHECK(find_isomorphism(link(octa, Simplex({v})), catalog::cycle(4)).has_value());
}
