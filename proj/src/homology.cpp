#include "curvlab/homology.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>

#include "curvlab/errors.hpp"

namespace curvlab {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) throw DomainError("matrix shapes do not compose");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

mpz_class determinant(const IntMatrix& M)
{
    if (M.rows() != M.cols()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix a = M;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------- dense SNF

namespace {

struct DenseSnf {
    IntMatrix D, U, V;
    bool track;

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
        if (track)
            for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
        if (track)
            for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
    }
    // row a -= q * row b
    void add_row(std::size_t a, std::size_t b, const mpz_class& q, std::size_t from)
    {
        for (std::size_t j = from; j < D.cols(); ++j)
            if (D(b, j) != 0) D(a, j) -= q * D(b, j);
        if (track)
            for (std::size_t j = 0; j < U.cols(); ++j)
                if (U(b, j) != 0) U(a, j) -= q * U(b, j);
    }
    // col a -= q * col b
    void add_col(std::size_t a, std::size_t b, const mpz_class& q, std::size_t from)
    {
        for (std::size_t i = from; i < D.rows(); ++i)
            if (D(i, b) != 0) D(i, a) -= q * D(i, b);
        if (track)
            for (std::size_t i = 0; i < V.rows(); ++i)
                if (V(i, b) != 0) V(i, a) -= q * V(i, b);
    }

    std::vector<mpz_class> run()
    {
        const std::size_t m = D.rows(), n = D.cols();
        std::vector<mpz_class> divisors;
        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            // smallest nonzero entry of the trailing block
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pr == m || abs(D(i, j)) < abs(D(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m) break;
            swap_rows(t, pr);
            swap_cols(t, pc);
            while (true) {
                bool clean = true;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (D(i, t) == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                    add_row(i, t, q, t);
                    if (D(i, t) != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (D(t, j) == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                    add_col(j, t, q, t);
                    if (D(t, j) != 0) clean = false;
                }
                if (!clean) {
                    // move the smallest remainder in row/column t to the pivot
                    std::size_t br = t, bc = t;
                    for (std::size_t i = t + 1; i < m; ++i)
                        if (D(i, t) != 0 && abs(D(i, t)) < abs(D(br, bc))) { br = i; bc = t; }
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (D(t, j) != 0 && abs(D(t, j)) < abs(D(br, bc))) { br = t; bc = j; }
                    swap_rows(t, br);
                    swap_cols(t, bc);
                    continue;
                }
                // divisibility of the trailing block by the pivot
                std::size_t bad = m;
                for (std::size_t i = t + 1; i < m && bad == m; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (D(i, j) % D(t, t) != 0) { bad = i; break; }
                if (bad == m) break;
                add_row(t, bad, -1, t);
            }
            if (D(t, t) < 0) {
                for (std::size_t j = t; j < n; ++j) D(t, j) = -D(t, j);
                if (track)
                    for (std::size_t j = 0; j < U.cols(); ++j) U(t, j) = -U(t, j);
            }
            divisors.push_back(D(t, t));
        }
        return divisors;
    }
};

std::vector<mpz_class> dense_divisors(IntMatrix M)
{
    DenseSnf s{std::move(M), {}, {}, false};
    return s.run();
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M)
{
    DenseSnf s{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols()), true};
    SmithForm out;
    out.divisors = s.run();
    out.U = std::move(s.U);
    out.V = std::move(s.V);
    return out;
}

// --------------------------------------------------------------- sparse SNF

IntMatrix SparseIntMatrix::to_dense() const
{
    IntMatrix d(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [r, v] : columns[j]) d(r, j) = static_cast<long>(v);
    return d;
}

std::size_t SparseIntMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

namespace {

struct Overflow {};

inline std::int64_t mul_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline mpz_class mul_checked(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class sub_checked(const mpz_class& a, const mpz_class& b) { return a - b; }
inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }

inline constexpr std::size_t kDenseLimit = 4'000'000;

template <typename T>
class UnitElimination {
public:
    using Column = std::vector<std::pair<std::uint32_t, T>>;

    UnitElimination(std::size_t rows, std::vector<Column> cols)
        : m_(rows), cols_(std::move(cols)), row_cols_(rows), row_count_(rows, 0), col_alive_(cols_.size(), 1)
    {
        for (std::uint32_t j = 0; j < cols_.size(); ++j)
            for (const auto& e : cols_[j]) {
                row_cols_[e.first].push_back(j);
                ++row_count_[e.first];
            }
        for (std::uint32_t j = 0; j < cols_.size(); ++j)
            if (cols_[j].empty()) col_alive_[j] = 0;
    }

    std::vector<mpz_class> run()
    {
        for (std::uint32_t r = 0; r < m_; ++r)
            if (row_count_[r] == 1) row_queue_.push_back(r);
        for (std::uint32_t j = 0; j < cols_.size(); ++j)
            if (cols_[j].size() == 1) col_queue_.push_back(j);
        while (true) {
            drain_singletons();
            auto p = best_unit_pivot();
            if (!p) break;
            eliminate(p->first, p->second);
        }
        return finish();
    }

private:
    std::size_t m_;
    std::vector<Column> cols_;
    std::vector<std::vector<std::uint32_t>> row_cols_;  // superset of columns holding the row
    std::vector<std::uint32_t> row_count_;
    std::vector<char> col_alive_;
    std::deque<std::uint32_t> row_queue_, col_queue_;
    std::size_t units_ = 0;

    const T* entry(std::uint32_t c, std::uint32_t r) const
    {
        const auto& col = cols_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& e, std::uint32_t x) { return e.first < x; });
        if (it == col.end() || it->first != r) return nullptr;
        return &it->second;
    }

    void drain_singletons()
    {
        while (!row_queue_.empty() || !col_queue_.empty()) {
            if (!col_queue_.empty()) {
                const auto c = col_queue_.front();
                col_queue_.pop_front();
                if (!col_alive_[c] || cols_[c].size() != 1) continue;
                if (is_unit(cols_[c][0].second)) eliminate(cols_[c][0].first, c);
                continue;
            }
            const auto r = row_queue_.front();
            row_queue_.pop_front();
            if (row_count_[r] != 1) continue;
            for (auto c : row_cols_[r]) {
                if (!col_alive_[c]) continue;
                if (const T* v = entry(c, r)) {
                    if (is_unit(*v)) eliminate(r, c);
                    break;
                }
            }
        }
    }

    std::optional<std::pair<std::uint32_t, std::uint32_t>> best_unit_pivot() const
    {
        std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
        std::size_t best_cost = static_cast<std::size_t>(-1);
        for (std::uint32_t c = 0; c < cols_.size(); ++c) {
            if (!col_alive_[c]) continue;
            const std::size_t cc = cols_[c].size() - 1;
            for (const auto& [r, v] : cols_[c]) {
                if (!is_unit(v)) continue;
                const std::size_t cost = cc * (row_count_[r] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best = std::pair{r, c};
                    if (cost == 0) return best;
                }
            }
        }
        return best;
    }

    void eliminate(std::uint32_t r, std::uint32_t c)
    {
        const T u = *entry(c, r);
        const Column pivot = cols_[c];
        // clear row r from every other column: col' -= (a * u) * col  (u = +-1)
        std::vector<std::uint32_t> others;
        for (auto c2 : row_cols_[r])
            if (c2 != c && col_alive_[c2] && entry(c2, r)) others.push_back(c2);
        std::sort(others.begin(), others.end());
        others.erase(std::unique(others.begin(), others.end()), others.end());
        for (auto c2 : others) {
            const T factor = mul_checked(*entry(c2, r), u);
            Column merged;
            merged.reserve(cols_[c2].size() + pivot.size());
            auto a = cols_[c2].begin(), ae = cols_[c2].end();
            auto b = pivot.begin(), be = pivot.end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == ae || b->first < a->first) {
                    T v = sub_checked(T(0), mul_checked(factor, b->second));
                    row_cols_[b->first].push_back(c2);
                    ++row_count_[b->first];
                    merged.emplace_back(b->first, std::move(v));
                    ++b;
                } else {
                    T v = sub_checked(a->second, mul_checked(factor, b->second));
                    if (v == 0) {
                        if (--row_count_[a->first] == 1) row_queue_.push_back(a->first);
                    } else {
                        merged.emplace_back(a->first, std::move(v));
                    }
                    ++a;
                    ++b;
                }
            }
            cols_[c2] = std::move(merged);
            if (cols_[c2].empty()) col_alive_[c2] = 0;
            else if (cols_[c2].size() == 1) col_queue_.push_back(c2);
        }
        for (const auto& [row, v] : cols_[c]) {
            if (--row_count_[row] == 1) row_queue_.push_back(row);
        }
        cols_[c].clear();
        col_alive_[c] = 0;
        row_cols_[r].clear();
        ++units_;
    }

    std::vector<mpz_class> finish()
    {
        std::vector<std::uint32_t> live_rows, live_cols;
        for (std::uint32_t r = 0; r < m_; ++r)
            if (row_count_[r] > 0) live_rows.push_back(r);
        for (std::uint32_t c = 0; c < cols_.size(); ++c)
            if (col_alive_[c]) live_cols.push_back(c);
        std::vector<mpz_class> out(units_, mpz_class(1));
        if (live_cols.empty()) return out;
        if (live_rows.size() * live_cols.size() > kDenseLimit) {
            throw ResourceError("Smith form remainder " + std::to_string(live_rows.size()) + "x" +
                                std::to_string(live_cols.size()) + " has no unit pivots and is too large");
        }
        IntMatrix d(live_rows.size(), live_cols.size());
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (const auto& [r, v] : cols_[live_cols[j]]) {
                const auto i = static_cast<std::size_t>(
                    std::lower_bound(live_rows.begin(), live_rows.end(), r) - live_rows.begin());
                d(i, j) = mpz_class(v);
            }
        for (auto& v : dense_divisors(std::move(d))) out.push_back(std::move(v));
        return out;
    }
};

template <typename T>
std::vector<typename UnitElimination<T>::Column> convert_columns(const SparseIntMatrix& M)
{
    std::vector<typename UnitElimination<T>::Column> cols(M.cols);
    for (std::size_t j = 0; j < M.cols; ++j)
        for (const auto& [r, v] : M.columns[j])
            if (v != 0) cols[j].emplace_back(r, T(static_cast<long>(v)));
    return cols;
}

}  // namespace

std::vector<mpz_class> smith_divisors(const SparseIntMatrix& M)
{
    std::vector<mpz_class> d;
    try {
        UnitElimination<std::int64_t> e(M.rows, convert_columns<std::int64_t>(M));
        d = e.run();
    } catch (const Overflow&) {
        UnitElimination<mpz_class> e(M.rows, convert_columns<mpz_class>(M));
        d = e.run();
    }
    // The dense tail already satisfies the divisibility chain and unit
    // pivots contribute leading ones.
    return d;
}

// ----------------------------------------------------------- chain complexes

ChainComplex boundary_matrices(const SimplicialComplex& X, int up_to, bool reduced)
{
    if (up_to < 0) throw DomainError("homology degree must be >= 0");
    ChainComplex cc;
    cc.reduced = reduced;
    const int top = std::min(up_to + 1, std::max(X.dimension(), 0));
    cc.basis.assign(static_cast<std::size_t>(top + 1), {});
    for (const Simplex& f : X.faces()) {
        if (f.dim() <= top) cc.basis[static_cast<std::size_t>(f.dim())].push_back(f);
    }
    cc.boundary.resize(cc.basis.size());
    for (int k = 0; k <= top; ++k) {
        auto& B = cc.boundary[static_cast<std::size_t>(k)];
        const auto& cols = cc.basis[static_cast<std::size_t>(k)];
        B.cols = cols.size();
        B.columns.resize(B.cols);
        if (k == 0) {
            B.rows = reduced ? 1 : 0;
            if (reduced)
                for (auto& c : B.columns) c.emplace_back(0, 1);
            continue;
        }
        const auto& rows = cc.basis[static_cast<std::size_t>(k - 1)];
        B.rows = rows.size();
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (std::size_t i = 0; i < cols[j].size(); ++i) {
                const Simplex face = cols[j].without_index(i);
                const auto r = static_cast<std::uint32_t>(std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
                B.columns[j].emplace_back(r, (i % 2 == 0) ? 1 : -1);
            }
            std::sort(B.columns[j].begin(), B.columns[j].end());
        }
    }
    return cc;
}

bool ChainComplex::squares_to_zero() const
{
    for (std::size_t k = 1; k < boundary.size(); ++k) {
        const auto& hi = boundary[k];
        const auto& lo = boundary[k - 1];
        for (const auto& col : hi.columns) {
            std::map<std::uint32_t, std::int64_t> acc;
            for (const auto& [r, v] : col)
                for (const auto& [r2, v2] : lo.columns[r]) acc[r2] += v * v2;
            for (const auto& [r, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

// ----------------------------------------------------------------- homology

namespace {

// Cells of the augmented chain complex surviving coreductions and
// elementary collapses; the restricted boundary is homology-equivalent to
// the original. Degree -1 is the empty cell.
struct ShrunkComplex {
    // per degree k = -1 .. top: matrices among survivors
    std::vector<SparseIntMatrix> boundary;  // index k+1: C_k -> C_{k-1}; index 0 unused
    std::vector<std::size_t> sizes;         // survivors per degree, index k+1
};

ShrunkComplex shrink(const ChainComplex& cc)
{
    const int top = cc.top();
    // global numbering: empty cell 0, then degree by degree
    std::vector<std::size_t> offset(static_cast<std::size_t>(top + 2));
    offset[0] = 0;
    std::size_t total = 1;
    for (int k = 0; k <= top; ++k) {
        offset[static_cast<std::size_t>(k + 1)] = total;
        total += cc.basis[static_cast<std::size_t>(k)].size();
    }
    std::vector<int> dim(total, -1);
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> bd(total), cobd(total);
    for (int k = 0; k <= top; ++k) {
        const auto& B = cc.boundary[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < B.cols; ++j) {
            const auto g = static_cast<std::uint32_t>(offset[static_cast<std::size_t>(k + 1)] + j);
            dim[g] = k;
            if (k == 0) {
                bd[g].emplace_back(0, 1);
                cobd[0].emplace_back(g, 1);
                continue;
            }
            for (const auto& [r, v] : B.columns[j]) {
                const auto f = static_cast<std::uint32_t>(offset[static_cast<std::size_t>(k)] + r);
                bd[g].emplace_back(f, v);
                cobd[f].emplace_back(g, v);
            }
        }
    }
    std::vector<char> alive(total, 1);
    std::vector<std::uint32_t> bcount(total), ccount(total);
    for (std::size_t i = 0; i < total; ++i) {
        bcount[i] = static_cast<std::uint32_t>(bd[i].size());
        ccount[i] = static_cast<std::uint32_t>(cobd[i].size());
    }
    std::deque<std::uint32_t> queue;
    for (std::uint32_t i = 0; i < total; ++i) queue.push_back(i);
    auto remove = [&](std::uint32_t x) {
        alive[x] = 0;
        for (const auto& [f, v] : bd[x])
            if (alive[f]) {
                --ccount[f];
                queue.push_front(f);
            }
        for (const auto& [g, v] : cobd[x])
            if (alive[g]) {
                --bcount[g];
                queue.push_front(g);
            }
    };
    auto unique_alive = [&](const std::vector<std::pair<std::uint32_t, std::int64_t>>& lst)
        -> std::pair<std::uint32_t, std::int64_t> {
        for (const auto& e : lst)
            if (alive[e.first]) return e;
        return {0, 0};
    };
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        if (!alive[x]) continue;
        if (bcount[x] == 1) {
            auto [b, v] = unique_alive(bd[x]);
            if (v == 1 || v == -1) {
                remove(x);
                remove(b);
                continue;
            }
        }
        if (ccount[x] == 1) {
            auto [a, v] = unique_alive(cobd[x]);
            if (v == 1 || v == -1) {
                remove(a);
                remove(x);
            }
        }
    }
    ShrunkComplex out;
    out.sizes.assign(static_cast<std::size_t>(top + 2), 0);
    std::vector<std::uint32_t> local(total, 0);
    for (std::size_t i = 0; i < total; ++i)
        if (alive[i]) local[i] = static_cast<std::uint32_t>(out.sizes[static_cast<std::size_t>(dim[i] + 1)]++);
    out.boundary.resize(static_cast<std::size_t>(top + 2));
    for (int k = 0; k <= top; ++k) {
        auto& M = out.boundary[static_cast<std::size_t>(k + 1)];
        M.rows = out.sizes[static_cast<std::size_t>(k)];
        M.cols = out.sizes[static_cast<std::size_t>(k + 1)];
        M.columns.assign(M.cols, {});
    }
    for (std::size_t i = 0; i < total; ++i) {
        if (!alive[i] || dim[i] < 0) continue;
        auto& col = out.boundary[static_cast<std::size_t>(dim[i] + 1)].columns[local[i]];
        for (const auto& [f, v] : bd[i])
            if (alive[f]) col.emplace_back(local[f], v);
        std::sort(col.begin(), col.end());
    }
    return out;
}

std::size_t count_nonunit(const std::vector<mpz_class>& d, std::vector<mpz_class>* torsion)
{
    for (const auto& v : d)
        if (v != 1 && torsion) torsion->push_back(v);
    return d.size();
}

// Unreduced bookkeeping: H_0 = reduced H_0 + Z when X is nonempty.
void unreduce(std::vector<std::size_t>& betti, bool reduced, const SimplicialComplex& X)
{
    if (!reduced && !X.empty() && !betti.empty()) ++betti[0];
}

}  // namespace

std::string HomologyGroup::to_string() const
{
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << "Z";
        if (betti > 1) os << '^' << betti;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::size_t> HomologyResult::betti() const
{
    std::vector<std::size_t> b;
    for (const auto& g : groups) b.push_back(g.betti);
    return b;
}

bool HomologyResult::has_torsion() const
{
    return std::any_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return !g.torsion.empty(); });
}

HomologyResult homology(const SimplicialComplex& X, int up_to, bool reduced)
{
    const ChainComplex cc = boundary_matrices(X, up_to, true);
    const ShrunkComplex s = shrink(cc);
    const int top = cc.top();
    // rank and torsion of each surviving boundary map, index k+1 for d_k
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 3), 0);
    std::vector<std::vector<mpz_class>> tors(static_cast<std::size_t>(top + 3));
    for (int k = 0; k <= top; ++k) {
        const auto d = smith_divisors(s.boundary[static_cast<std::size_t>(k + 1)]);
        rank[static_cast<std::size_t>(k + 1)] = count_nonunit(d, &tors[static_cast<std::size_t>(k + 1)]);
    }
    HomologyResult res;
    std::vector<std::size_t> betti;
    for (int k = 0; k <= up_to; ++k) {
        HomologyGroup g;
        if (k <= top) {
            const std::size_t n = s.sizes[static_cast<std::size_t>(k + 1)];
            g.betti = n - rank[static_cast<std::size_t>(k + 1)] - rank[static_cast<std::size_t>(k + 2)];
            g.torsion = tors[static_cast<std::size_t>(k + 2)];
        }
        betti.push_back(g.betti);
        res.groups.push_back(std::move(g));
    }
    unreduce(betti, reduced, X);
    for (std::size_t k = 0; k < betti.size(); ++k) res.groups[k].betti = betti[k];
    return res;
}

namespace {

// Rank over Q by fraction-free elimination.
std::size_t rational_rank(IntMatrix a)
{
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && a(p, c) == 0) ++p;
        if (p == m) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(rank, j), a(p, j));
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) a(i, j) = (a(i, j) * a(rank, c) - a(i, c) * a(rank, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(rank, c);
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<std::size_t> cohomology_Q(const SimplicialComplex& X, int up_to, bool reduced)
{
    const ChainComplex cc = boundary_matrices(X, up_to, true);
    const ShrunkComplex s = shrink(cc);
    const int top = cc.top();
    // coboundary delta_{k-1}: C^{k-1} -> C^k is the transpose of d_k
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 3), 0);
    for (int k = 0; k <= top; ++k) {
        const auto& M = s.boundary[static_cast<std::size_t>(k + 1)];
        // the rank over Q is the number of nonzero invariant factors
        rank[static_cast<std::size_t>(k + 1)] = M.rows * M.cols > kDenseLimit
                                                    ? smith_divisors(M).size()
                                                    : rational_rank(M.to_dense().transposed());
    }
    std::vector<std::size_t> dims;
    for (int k = 0; k <= up_to; ++k) {
        if (k > top) {
            dims.push_back(0);
            continue;
        }
        const std::size_t n = s.sizes[static_cast<std::size_t>(k + 1)];
        dims.push_back(n - rank[static_cast<std::size_t>(k + 1)] - rank[static_cast<std::size_t>(k + 2)]);
    }
    unreduce(dims, reduced, X);
    return dims;
}

bool bounds_over_Z(const SimplicialComplex& X, int k, const std::map<Simplex, long>& chain)
{
    if (k < 0) throw DomainError("chain degree must be >= 0");
    const ChainComplex cc = boundary_matrices(X, k, false);
    const auto& rows = cc.basis[static_cast<std::size_t>(k)];
    std::vector<std::pair<std::uint32_t, std::int64_t>> z;
    for (const auto& [s, v] : chain) {
        if (v == 0) continue;
        auto it = std::lower_bound(rows.begin(), rows.end(), s);
        if (s.dim() != k || it == rows.end() || *it != s) {
            throw DomainError("chain simplex " + s.to_string() + " is not a " + std::to_string(k) + "-face");
        }
        z.emplace_back(static_cast<std::uint32_t>(it - rows.begin()), v);
    }
    std::sort(z.begin(), z.end());
    if (z.empty()) return true;
    SparseIntMatrix A;
    if (static_cast<std::size_t>(k + 1) < cc.boundary.size()) {
        A = cc.boundary[static_cast<std::size_t>(k + 1)];
    } else {
        A.rows = rows.size();
    }
    SparseIntMatrix Az = A;
    Az.columns.push_back(z);
    Az.cols += 1;
    const auto d1 = smith_divisors(A);
    const auto d2 = smith_divisors(Az);
    if (d1.size() != d2.size()) return false;
    mpz_class p1 = 1, p2 = 1;
    for (const auto& v : d1) p1 *= v;
    for (const auto& v : d2) p2 *= v;
    return p1 == p2;
}

}  // namespace curvlab
