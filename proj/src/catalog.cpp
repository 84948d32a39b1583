#include "curvlab/catalog.hpp"

#include <algorithm>

#include "curvlab/errors.hpp"

namespace curvlab::catalog {

namespace {

SimplicialComplex from_lists(std::vector<std::vector<VertexId>> faces)
{
    for (auto& f : faces) std::sort(f.begin(), f.end());
    return SimplicialComplex::from_maximal_faces(faces);
}

}  // namespace

SimplicialComplex full_simplex(int vertex_count, VertexId first)
{
    if (vertex_count < 1) throw DomainError("full_simplex needs at least one vertex");
    std::vector<VertexId> v;
    for (int i = 0; i < vertex_count; ++i) v.push_back(first + i);
    return from_lists({v});
}

SimplicialComplex hollow_triangle() { return from_lists({{1, 2}, {2, 3}, {1, 3}}); }

SimplicialComplex cycle(int length, VertexId first)
{
    if (length < 3) throw DomainError("cycle needs at least three vertices");
    std::vector<std::vector<VertexId>> edges;
    for (int i = 0; i < length; ++i) {
        edges.push_back({first + i, first + (i + 1) % length});
    }
    return from_lists(edges);
}

SimplicialComplex path(int vertex_count, VertexId first)
{
    if (vertex_count < 1) throw DomainError("path needs at least one vertex");
    if (vertex_count == 1) return from_lists({{first}});
    std::vector<std::vector<VertexId>> edges;
    for (int i = 0; i + 1 < vertex_count; ++i) edges.push_back({first + i, first + i + 1});
    return from_lists(edges);
}

SimplicialComplex wheel(int k)
{
    if (k < 3) throw DomainError("wheel needs a rim of length >= 3");
    std::vector<std::vector<VertexId>> tri;
    for (int i = 0; i < k; ++i) tri.push_back({0, 1 + i, 1 + (i + 1) % k});
    return from_lists(tri);
}

SimplicialComplex octahedron()
{
    std::vector<std::vector<VertexId>> tri;
    for (VertexId a : {1, 2})
        for (VertexId b : {3, 4})
            for (VertexId c : {5, 6}) tri.push_back({a, b, c});
    return from_lists(tri);
}

SimplicialComplex icosahedron()
{
    std::vector<std::vector<VertexId>> tri;
    for (int i = 0; i < 5; ++i) {
        const VertexId u = 1 + i, un = 1 + (i + 1) % 5;
        const VertexId l = 6 + i, ln = 6 + (i + 1) % 5;
        tri.push_back({0, u, un});
        tri.push_back({u, un, l});
        tri.push_back({un, l, ln});
        tri.push_back({11, l, ln});
    }
    return from_lists(tri);
}

SimplicialComplex projective_plane()
{
    return from_lists({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                       {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
}

SimplicialComplex torus(int rows, int cols)
{
    if (rows < 3 || cols < 3) throw DomainError("torus grid needs at least 3x3");
    auto id = [cols, rows](int r, int c) -> VertexId {
        return static_cast<VertexId>(((r % rows + rows) % rows) * cols + (c % cols + cols) % cols);
    };
    std::vector<std::vector<VertexId>> tri;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            tri.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1)});
            tri.push_back({id(r, c), id(r + 1, c), id(r + 1, c + 1)});
        }
    }
    return from_lists(tri);
}

SimplicialComplex two_disjoint_edges() { return from_lists({{1, 2}, {3, 4}}); }

std::vector<Named> standard()
{
    return {
        {"point", full_simplex(1)},
        {"edge", full_simplex(2)},
        {"triangle", full_simplex(3)},
        {"simplex4", full_simplex(4)},
        {"simplex5", full_simplex(5)},
        {"hollow_triangle", hollow_triangle()},
        {"cycle4", cycle(4)},
        {"cycle5", cycle(5)},
        {"cycle6", cycle(6)},
        {"path4", path(4)},
        {"wheel5", wheel(5)},
        {"wheel6", wheel(6)},
        {"octahedron", octahedron()},
        {"icosahedron", icosahedron()},
        {"projective_plane", projective_plane()},
        {"torus3x3", torus(3, 3)},
        {"torus4x4", torus(4, 4)},
        {"two_edges", two_disjoint_edges()},
    };
}

}  // namespace curvlab::catalog
