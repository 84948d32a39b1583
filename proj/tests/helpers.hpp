#pragma once

#include <random>
#include <vector>

#include "curvlab/simplicial_complex.hpp"
#include "oracles.hpp"

namespace testutil {

inline oracle::FaceSet faces_of(const curvlab::SimplicialComplex& X)
{
    oracle::FaceSet out;
    for (const auto& f : X.faces()) out.insert(oracle::Face(f.vertices().begin(), f.vertices().end()));
    return out;
}

inline std::vector<oracle::Face> maximal_lists(const curvlab::SimplicialComplex& X)
{
    std::vector<oracle::Face> out;
    for (const auto& f : X.maximal_faces()) out.emplace_back(f.vertices().begin(), f.vertices().end());
    return out;
}

// Flag complex of a G(n, p) random graph on vertices 1..n.
inline curvlab::SimplicialComplex random_flag(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) adj[a][b] = adj[b][a] = coin(rng);
    std::vector<curvlab::VertexId> v;
    for (int a = 1; a <= n; ++a) v.push_back(a);
    return curvlab::clique_complex(v, [&](curvlab::VertexId a, curvlab::VertexId b) { return adj[a][b]; });
}

}  // namespace testutil
