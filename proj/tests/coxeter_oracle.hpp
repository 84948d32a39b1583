#pragma once

#include <set>
#include <vector>

#include "curvlab/coxeter.hpp"

namespace testutil {

inline bool shortlex_less(const curvlab::Word& a, const curvlab::Word& b)
{
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

// Shortlex least word reachable by cancelling adjacent equal letters and
// swapping adjacent commuting letters.
inline curvlab::Word rewrite_oracle(const curvlab::CoxeterSystem& W, const curvlab::Word& w)
{
    std::set<curvlab::Word> seen{w};
    std::vector<curvlab::Word> todo{w};
    curvlab::Word best = w;
    while (!todo.empty()) {
        curvlab::Word u = todo.back();
        todo.pop_back();
        if (shortlex_less(u, best)) best = u;
        for (std::size_t i = 0; i + 1 < u.size(); ++i) {
            curvlab::Word v = u;
            if (u[i] == u[i + 1]) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            } else if (W.commute(u[i], u[i + 1])) {
                std::swap(v[i], v[i + 1]);
            } else {
                continue;
            }
            if (seen.insert(v).second) todo.push_back(std::move(v));
        }
    }
    return best;
}

}  // namespace testutil
