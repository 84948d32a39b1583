#include <algorithm>

#include "curvlab/errors.hpp"
#include "curvlab/homology.hpp"

namespace curvlab {

namespace {

using Column = std::vector<std::pair<std::uint32_t, mpq_class>>;

// a -= q * b
void axpy(Column& a, const mpq_class& q, const Column& b)
{
    Column out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, -q * j->second);
            ++j;
        } else {
            mpq_class v = i->second - q * j->second;
            if (v != 0) out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

std::vector<Column> rational_columns(const SparseIntMatrix& M)
{
    std::vector<Column> cols(M.cols);
    for (std::size_t j = 0; j < M.cols; ++j)
        for (const auto& [r, v] : M.columns[j]) cols[j].emplace_back(r, mpq_class(static_cast<long>(v)));
    return cols;
}

}  // namespace

RationalHomology::RationalHomology(const SimplicialComplex& X, int k, bool reduced) : k_(k)
{
    if (k < 0) throw DomainError("homology degree must be >= 0");
    if (X.empty() || k > X.dimension()) return;  // no k-simplices
    const ChainComplex cc = boundary_matrices(X, k, reduced);
    basis_ = cc.basis[static_cast<std::size_t>(k)];
    const std::size_t n = basis_.size();

    // Reduce d_k left to right, tracking the column operations in V.
    std::vector<Column> R = rational_columns(cc.boundary[static_cast<std::size_t>(k)]);
    std::vector<Column> V(n);
    for (std::uint32_t j = 0; j < n; ++j) V[j].emplace_back(j, mpq_class(1));
    const std::size_t lower_rows = cc.boundary[static_cast<std::size_t>(k)].rows;
    std::vector<int> owner(lower_rows, -1);
    std::vector<char> is_cycle(n, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
        while (!R[j].empty()) {
            const auto low = R[j].back().first;
            const int o = owner[low];
            if (o < 0) break;
            const mpq_class q = R[j].back().second / R[static_cast<std::size_t>(o)].back().second;
            axpy(R[j], q, R[static_cast<std::size_t>(o)]);
            axpy(V[j], q, V[static_cast<std::size_t>(o)]);
        }
        if (R[j].empty()) is_cycle[j] = 1;
        else owner[R[j].back().first] = static_cast<int>(j);
    }

    // Reduce d_{k+1}; its pivots mark the cycles that bound.
    boundary_low_owner_.assign(n, -1);
    if (static_cast<std::size_t>(k + 1) < cc.boundary.size()) {
        std::vector<Column> B = rational_columns(cc.boundary[static_cast<std::size_t>(k + 1)]);
        for (auto& col : B) {
            while (!col.empty()) {
                const int o = boundary_low_owner_[col.back().first];
                if (o < 0) break;
                const Column& p = boundary_by_low_[static_cast<std::size_t>(o)];
                axpy(col, col.back().second / p.back().second, p);
            }
            if (!col.empty()) {
                boundary_low_owner_[col.back().first] = static_cast<int>(boundary_by_low_.size());
                boundary_by_low_.push_back(std::move(col));
            }
        }
    }
    essential_owner_.assign(n, -1);
    for (std::uint32_t j = 0; j < n; ++j) {
        if (!is_cycle[j] || boundary_low_owner_[j] >= 0) continue;
        essential_owner_[j] = static_cast<int>(essential_.size());
        essential_.push_back(j);
        cycles_.push_back(std::move(V[j]));
    }
}

RationalChain RationalHomology::representative(std::size_t i) const
{
    RationalChain out;
    for (const auto& [r, v] : cycles_.at(i)) out.emplace(basis_[r], v);
    return out;
}

std::vector<mpq_class> RationalHomology::reduce(Column c) const
{
    std::vector<mpq_class> coord(essential_.size(), mpq_class(0));
    while (!c.empty()) {
        const auto low = c.back().first;
        if (const int o = boundary_low_owner_[low]; o >= 0) {
            const Column& p = boundary_by_low_[static_cast<std::size_t>(o)];
            axpy(c, c.back().second / p.back().second, p);
        } else if (const int e = essential_owner_[low]; e >= 0) {
            const mpq_class q = c.back().second;  // top entry of the cycle is 1
            coord[static_cast<std::size_t>(e)] += q;
            axpy(c, q, cycles_[static_cast<std::size_t>(e)]);
        } else {
            throw DomainError("chain is not a " + std::to_string(k_) + "-cycle");
        }
    }
    return coord;
}

std::vector<mpq_class> RationalHomology::coordinates(const RationalChain& z) const
{
    Column c;
    for (const auto& [s, v] : z) {
        if (v == 0) continue;
        auto it = std::lower_bound(basis_.begin(), basis_.end(), s);
        if (it == basis_.end() || *it != s) {
            throw DomainError("chain simplex " + s.to_string() + " is not a " + std::to_string(k_) + "-face");
        }
        c.emplace_back(static_cast<std::uint32_t>(it - basis_.begin()), v);
    }
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return reduce(std::move(c));
}

bool RationalHomology::is_boundary(const RationalChain& z) const
{
    const auto c = coordinates(z);
    return std::all_of(c.begin(), c.end(), [](const mpq_class& v) { return v == 0; });
}

bool InducedMap::is_zero() const
{
    for (const auto& row : matrix)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

std::size_t InducedMap::rank() const
{
    auto a = matrix;
    std::size_t rank = 0;
    const std::size_t m = a.size(), n = source_rank;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[rank], a[p]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            if (a[i][c] == 0) continue;
            const mpq_class q = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= q * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

InducedMap induced_map(const SimplicialComplex& X, const SimplicialComplex& Y, const VertexMap& f, int k,
                       bool reduced)
{
    for (VertexId v : X.vertices()) {
        auto it = f.find(v);
        if (it == f.end()) throw DomainError("vertex map undefined on " + std::to_string(v));
        if (!Y.has_vertex(it->second)) {
            throw DomainError("vertex " + std::to_string(v) + " maps outside the target");
        }
    }
    for (const Simplex& s : X.faces()) {
        std::vector<VertexId> img;
        for (VertexId v : s.vertices()) img.push_back(f.at(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (!Y.contains(Simplex::unchecked(img))) {
            throw DomainError("map is not simplicial: image of " + s.to_string() + " is not a face");
        }
    }
    const RationalHomology src(X, k, reduced), dst(Y, k, reduced);
    InducedMap m;
    m.degree = k;
    m.source_rank = src.rank();
    m.target_rank = dst.rank();
    m.matrix.assign(m.target_rank, std::vector<mpq_class>(m.source_rank, mpq_class(0)));
    for (std::size_t j = 0; j < src.rank(); ++j) {
        RationalChain pushed;
        for (const auto& [s, v] : src.representative(j)) {
            std::vector<VertexId> img;
            for (VertexId x : s.vertices()) img.push_back(f.at(x));
            // sign of the sorting permutation; degenerate images vanish
            int sign = 1;
            for (std::size_t a = 0; a < img.size(); ++a)
                for (std::size_t b = a + 1; b < img.size(); ++b) {
                    if (img[a] == img[b]) sign = 0;
                    else if (img[a] > img[b]) sign = -sign;
                }
            if (sign == 0) continue;
            std::sort(img.begin(), img.end());
            pushed[Simplex::unchecked(img)] += v * sign;
        }
        const auto col = dst.coordinates(pushed);
        for (std::size_t i = 0; i < m.target_rank; ++i) m.matrix[i][j] = col[i];
    }
    const auto hx = homology(X, k, reduced), hy = homology(Y, k, reduced);
    m.free_part_only = !hx.groups[static_cast<std::size_t>(k)].torsion.empty() ||
                       !hy.groups[static_cast<std::size_t>(k)].torsion.empty();
    return m;
}

InducedMap inclusion_map(const SimplicialComplex& X, const SimplicialComplex& Y, int k, bool reduced)
{
    VertexMap id;
    for (VertexId v : X.vertices()) id[v] = v;
    return induced_map(X, Y, id, k, reduced);
}

}  // namespace curvlab
