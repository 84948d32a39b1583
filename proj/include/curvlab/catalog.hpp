#pragma once

#include <string>
#include <vector>

#include "curvlab/simplicial_complex.hpp"

// Small named complexes used by the test suites and the CLI examples.
namespace curvlab::catalog {

SimplicialComplex full_simplex(int vertex_count, VertexId first = 1);
SimplicialComplex hollow_triangle();
SimplicialComplex cycle(int length, VertexId first = 1);
SimplicialComplex path(int vertex_count, VertexId first = 1);
// hub 0, rim 1..k in cyclic order
SimplicialComplex wheel(int k);
// vertices 1..6; {1,2}, {3,4}, {5,6} are the non-edges
SimplicialComplex octahedron();
// top 0, upper ring 1..5, lower ring 6..10, bottom 11
SimplicialComplex icosahedron();
// minimal 6-vertex triangulation of the real projective plane
SimplicialComplex projective_plane();
// rows x cols grid on the torus, each square split along its main diagonal
SimplicialComplex torus(int rows, int cols);
SimplicialComplex two_disjoint_edges();

struct Named {
    std::string name;
    SimplicialComplex complex;
};

// Every complex above at a representative size.
std::vector<Named> standard();

}  // namespace curvlab::catalog
