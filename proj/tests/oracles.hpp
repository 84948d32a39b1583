#pragma once
// Brute-force reference implementations. Deliberately naive: they work on
// plain vectors and subset enumeration and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Face = std::vector<std::int64_t>;
using FaceSet = std::set<Face>;

inline FaceSet closure(const std::vector<Face>& maximal)
{
    FaceSet out;
    for (const auto& m : maximal) {
        const std::size_t n = m.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Face f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) f.push_back(m[i]);
            out.insert(f);
        }
    }
    return out;
}

inline Face vertices_of(const FaceSet& faces)
{
    std::set<std::int64_t> v;
    for (const auto& f : faces)
        for (auto x : f) v.insert(x);
    return {v.begin(), v.end()};
}

inline bool has_edge(const FaceSet& faces, std::int64_t a, std::int64_t b)
{
    if (a > b) std::swap(a, b);
    return faces.count({a, b}) > 0;
}

inline Face sorted_union(Face a, const Face& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

inline bool disjoint(const Face& a, const Face& b)
{
    for (auto x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    return true;
}

inline FaceSet link(const FaceSet& X, const Face& sigma)
{
    FaceSet out;
    for (const auto& t : X)
        if (disjoint(t, sigma) && X.count(sorted_union(t, sigma))) out.insert(t);
    return out;
}

inline FaceSet span(const FaceSet& X, const Face& A)
{
    FaceSet out;
    for (const auto& f : X)
        if (std::all_of(f.begin(), f.end(),
                        [&](auto x) { return std::find(A.begin(), A.end(), x) != A.end(); }))
            out.insert(f);
    return out;
}

// Every vertex subset that is pairwise adjacent must be a face.
inline bool is_flag(const FaceSet& X)
{
    const Face v = vertices_of(X);
    const std::size_t n = v.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Face f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) f.push_back(v[i]);
        bool clique = true;
        for (std::size_t i = 0; i < f.size() && clique; ++i)
            for (std::size_t j = i + 1; j < f.size() && clique; ++j)
                clique = has_edge(X, f[i], f[j]);
        if (clique && !X.count(f)) return false;
    }
    return true;
}

// Vertex subsets of size 4..k-1 whose induced graph is a single cycle.
inline std::vector<Face> full_cycle_vertex_sets(const FaceSet& X, int k)
{
    const Face v = vertices_of(X);
    const std::size_t n = v.size();
    std::vector<Face> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Face f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) f.push_back(v[i]);
        if (f.size() < 4 || static_cast<int>(f.size()) >= k) continue;
        bool ok = true;
        for (auto a : f) {
            int deg = 0;
            for (auto b : f)
                if (a != b && has_edge(X, a, b)) ++deg;
            if (deg != 2) ok = false;
        }
        if (!ok) continue;
        // connected: walk from f[0]
        std::set<std::int64_t> seen{f[0]};
        std::vector<std::int64_t> stack{f[0]};
        while (!stack.empty()) {
            auto a = stack.back();
            stack.pop_back();
            for (auto b : f)
                if (!seen.count(b) && has_edge(X, a, b)) {
                    seen.insert(b);
                    stack.push_back(b);
                }
        }
        if (seen.size() == f.size()) out.push_back(f);
    }
    return out;
}

inline std::vector<std::int64_t> neighbours(const FaceSet& X, std::int64_t v)
{
    std::vector<std::int64_t> out;
    for (auto u : vertices_of(X))
        if (u != v && has_edge(X, u, v)) out.push_back(u);
    return out;
}

// True iff the subgraph induced on f is one cycle (|f| >= 4).
inline bool induces_cycle(const FaceSet& X, const Face& f)
{
    if (f.size() < 4) return false;
    for (auto a : f) {
        int deg = 0;
        for (auto b : f)
            if (a != b && has_edge(X, a, b)) ++deg;
        if (deg != 2) return false;
    }
    std::set<std::int64_t> seen{f[0]};
    std::vector<std::int64_t> stack{f[0]};
    while (!stack.empty()) {
        auto a = stack.back();
        stack.pop_back();
        for (auto b : f)
            if (!seen.count(b) && has_edge(X, a, b)) {
                seen.insert(b);
                stack.push_back(b);
            }
    }
    return seen.size() == f.size();
}

inline std::vector<Face> subsets_of_size(const Face& v, std::size_t k)
{
    std::vector<Face> out;
    const std::size_t n = v.size();
    if (k > n) return out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
        Face f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) f.push_back(v[i]);
        out.push_back(f);
    }
    return out;
}

struct PendantWheel {
    std::int64_t hub;
    Face rim_set;
    std::int64_t a, b, t;
};

inline std::size_t count_wheels(const FaceSet& X, std::size_t k)
{
    std::size_t n = 0;
    for (auto h : vertices_of(X))
        for (const auto& s : subsets_of_size(neighbours(X, h), k))
            if (induces_cycle(X, s)) ++n;
    return n;
}

inline std::vector<PendantWheel> pendant_wheels(const FaceSet& X, std::size_t k)
{
    std::vector<PendantWheel> out;
    const Face all = vertices_of(X);
    for (auto h : all)
        for (const auto& s : subsets_of_size(neighbours(X, h), k)) {
            if (!induces_cycle(X, s)) continue;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    if (!has_edge(X, s[i], s[j])) continue;
                    for (auto t : all) {
                        if (t == h || std::find(s.begin(), s.end(), t) != s.end()) continue;
                        if (X.count(sorted_union({s[i], s[j]}, {t}))) out.push_back({h, s, s[i], s[j], t});
                    }
                }
        }
    return out;
}

inline bool in_some_unit_ball(const FaceSet& X, const Face& w)
{
    for (auto v : vertices_of(X)) {
        bool ok = true;
        for (auto x : w)
            if (x != v && !has_edge(X, x, v)) ok = false;
        if (ok) return true;
    }
    return false;
}

inline bool sd2star(const FaceSet& X)
{
    if (!is_flag(X)) return false;
    if (count_wheels(X, 4) > 0) return false;
    for (const auto& w : pendant_wheels(X, 5)) {
        Face all = w.rim_set;
        all.push_back(w.hub);
        all.push_back(w.t);
        if (!in_some_unit_ball(X, all)) return false;
    }
    return true;
}

inline bool sd2star_links(const FaceSet& X)
{
    if (!sd2star(X)) return false;
    for (const auto& s : X)
        if (!sd2star(link(X, s))) return false;
    return true;
}

inline bool every_full_subcomplex_sd2star(const FaceSet& X)
{
    const Face v = vertices_of(X);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << v.size()); ++mask) {
        Face a;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (mask >> i & 1) a.push_back(v[i]);
        if (!sd2star(span(X, a))) return false;
    }
    return true;
}

}  // namespace oracle
