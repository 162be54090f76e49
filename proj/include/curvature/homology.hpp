#pragma once

// Simplicial chain complexes of a SimplicialComplex and their homology over
// Q, GF(p) and Z.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "curvature/errors.hpp"
#include "curvature/rational.hpp"
#include "curvature/state_complex.hpp"

namespace curvature {

/// Column-major sparse integer matrix. Entries in each column are sorted by
/// row and never zero.
class SparseIntMatrix {
public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;
    using Column = std::vector<Entry>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense)
    {
        const std::size_t rows = dense.size();
        const std::size_t cols = rows == 0 ? 0 : dense[0].size();
        SparseIntMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (dense[i].size() != cols)
                fail(ErrorKind::DimensionMismatch, "ragged dense matrix");
            for (std::size_t j = 0; j < cols; ++j)
                if (dense[i][j] != 0)
                    a.columns_[j].push_back({static_cast<std::uint32_t>(i), dense[i][j]});
        }
        return a;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    const Column& column(std::size_t j) const { return columns_[j]; }

    /// Replaces column j; entries must be sorted by row and nonzero.
    void set_column(std::size_t j, Column entries) { columns_[j] = std::move(entries); }

    std::size_t nnz() const noexcept
    {
        std::size_t total = 0;
        for (const auto& c : columns_)
            total += c.size();
        return total;
    }

    bool is_zero() const noexcept
    {
        return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
    }

    std::int64_t at(std::size_t i, std::size_t j) const
    {
        for (const auto& [r, v] : columns_[j])
            if (r == i)
                return v;
        return 0;
    }

    std::vector<std::vector<std::int64_t>> to_dense() const
    {
        std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols(), 0));
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto& [r, v] : columns_[j])
                out[r][j] = v;
        return out;
    }

    /// One "row col value" line per nonzero entry, 0-based, column-major.
    std::string to_triples() const
    {
        std::ostringstream out;
        out << rows_ << " " << cols() << " " << nnz() << "\n";
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto& [r, v] : columns_[j])
                out << r << " " << j << " " << v << "\n";
        return out.str();
    }

    friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b)
    {
        if (a.cols() != b.rows())
            fail(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                   std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                   "x" + std::to_string(b.cols()));
        SparseIntMatrix out(a.rows(), b.cols());
        std::map<std::uint32_t, std::int64_t> acc;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc.clear();
            for (const auto& [k, bv] : b.columns_[j])
                for (const auto& [i, av] : a.columns_[k])
                    acc[i] += av * bv;
            for (const auto& [i, v] : acc)
                if (v != 0)
                    out.columns_[j].push_back({i, v});
        }
        return out;
    }

    friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// dims[d] = number of d-simplices; boundary(d) maps C_d -> C_{d-1}.
struct ChainComplex {
    std::vector<std::size_t> dims;
    /// boundaries[d - 1] is the boundary map out of degree d, for d = 1..top.
    std::vector<SparseIntMatrix> boundaries;

    int top_degree() const noexcept { return static_cast<int>(dims.size()) - 1; }

    /// The boundary out of degree d; zero maps at the ends.
    SparseIntMatrix boundary(int d) const
    {
        if (d >= 1 && d <= static_cast<int>(boundaries.size()))
            return boundaries[static_cast<std::size_t>(d - 1)];
        const std::size_t cols = d >= 0 && d < static_cast<int>(dims.size()) ? dims[static_cast<std::size_t>(d)] : 0;
        const std::size_t rows =
            d >= 1 && d - 1 < static_cast<int>(dims.size()) ? dims[static_cast<std::size_t>(d - 1)] : 0;
        return SparseIntMatrix(rows, cols);
    }

    bool square_zero() const
    {
        for (std::size_t d = 1; d < boundaries.size(); ++d)
            if (!(boundaries[d - 1] * boundaries[d]).is_zero())
                return false;
        return true;
    }
};

inline ChainComplex boundary_matrices(const SimplicialComplex& k)
{
    ChainComplex c;
    for (int d = 0; d <= k.dimension(); ++d)
        c.dims.push_back(k.size(d));
    for (int d = 1; d <= k.dimension(); ++d) {
        SparseIntMatrix m(k.size(d - 1), k.size(d));
        for (std::size_t j = 0; j < k.size(d); ++j) {
            const VertexSet& s = k.set(d, j);
            SparseIntMatrix::Column col;
            std::int64_t sign = 1;
            for (auto v : s.to_vector()) {
                VertexSet face = s;
                face.erase(v);
                auto row = k.index_of(face);
                if (!row)
                    fail(ErrorKind::InvalidArgument, "complex is not closed under faces");
                col.push_back({static_cast<std::uint32_t>(*row), sign});
                sign = -sign;
            }
            std::sort(col.begin(), col.end());
            m.set_column(j, std::move(col));
        }
        c.boundaries.push_back(std::move(m));
    }
    return c;
}

// ---------------------------------------------------------------------------
// Ranks

inline constexpr std::uint32_t kRankPrimes[] = {2147483647U, 2147483629U, 2147483587U};

/// Dense fraction-free elimination is used below this many entries.
inline constexpr std::size_t kBareissEntryLimit = 40000;

namespace detail {

inline std::uint64_t reduce_mod(std::int64_t v, std::uint32_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1U)
            r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

} // namespace detail

/// Rank over GF(p) by column reduction with lowest-row pivots.
inline std::size_t rank_mod_p(const SparseIntMatrix& a, std::uint32_t p)
{
    using Col = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    std::vector<std::int64_t> pivot_of_row(a.rows(), -1);
    std::vector<Col> reduced(a.cols());
    std::size_t rank = 0;
    Col work;
    Col merged;

    for (std::size_t j = 0; j < a.cols(); ++j) {
        work.clear();
        for (const auto& [r, v] : a.column(j)) {
            const std::uint64_t m = detail::reduce_mod(v, p);
            if (m != 0)
                work.push_back({r, m});
        }
        while (!work.empty()) {
            const auto [low, lv] = work.back();
            const std::int64_t owner = pivot_of_row[low];
            if (owner < 0) {
                pivot_of_row[low] = static_cast<std::int64_t>(j);
                reduced[j] = work;
                ++rank;
                break;
            }
            const Col& piv = reduced[static_cast<std::size_t>(owner)];
            const std::uint64_t inv = detail::pow_mod(piv.back().second, p - 2, p);
            const std::uint64_t factor = lv * inv % p;
            // work -= factor * piv
            merged.clear();
            std::size_t x = 0;
            std::size_t y = 0;
            while (x < work.size() || y < piv.size()) {
                if (y == piv.size() || (x < work.size() && work[x].first < piv[y].first)) {
                    merged.push_back(work[x++]);
                } else if (x == work.size() || piv[y].first < work[x].first) {
                    merged.push_back({piv[y].first, (p - factor * piv[y].second % p) % p});
                    ++y;
                } else {
                    const std::uint64_t v = (work[x].second + p - factor * piv[y].second % p) % p;
                    if (v != 0)
                        merged.push_back({work[x].first, v});
                    ++x;
                    ++y;
                }
            }
            work.swap(merged);
        }
    }
    return rank;
}

/// Exact rank over Q by fraction-free Gaussian elimination on a dense copy.
inline std::size_t rank_bareiss(const SparseIntMatrix& a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [r, v] : a.column(j))
            m[r][j] = v;

    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        const BigInt& pv = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const BigInt lead = m[i][col];
            for (std::size_t k = col + 1; k < cols; ++k) {
                m[i][k] = (pv * m[i][k] - lead * m[rank][k]) / prev;
            }
            m[i][col] = 0;
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

/// Rank over Q: exact for small matrices, otherwise the common rank modulo
/// three large primes. Throws RankDisagreement if the primes disagree.
inline std::size_t rank_rational(const SparseIntMatrix& a)
{
    if (a.rows() * a.cols() <= kBareissEntryLimit)
        return rank_bareiss(a);
    const std::size_t first = rank_mod_p(a, kRankPrimes[0]);
    for (std::size_t i = 1; i < std::size(kRankPrimes); ++i) {
        const std::size_t other = rank_mod_p(a, kRankPrimes[i]);
        if (other != first)
            fail(ErrorKind::RankDisagreement, "rank " + std::to_string(first) + " mod " +
                                                  std::to_string(kRankPrimes[0]) + " but " + std::to_string(other) +
                                                  " mod " + std::to_string(kRankPrimes[i]));
    }
    return first;
}

/// Rank over Q (p = 0) or GF(p).
inline std::size_t rank_over(const SparseIntMatrix& a, std::uint32_t p)
{
    return p == 0 ? rank_rational(a) : rank_mod_p(a, p);
}

/// ranks[d] = rank of boundary(d), for d = 0..top+1 (zero at both ends).
inline std::vector<std::size_t> boundary_ranks(const ChainComplex& c, std::uint32_t p)
{
    std::vector<std::size_t> ranks(c.dims.size() + 1, 0);
    for (std::size_t d = 1; d < c.dims.size(); ++d)
        ranks[d] = rank_over(c.boundaries[d - 1], p);
    return ranks;
}

inline std::vector<std::int64_t> betti_from_ranks(const ChainComplex& c, const std::vector<std::size_t>& ranks)
{
    std::vector<std::int64_t> betti;
    for (std::size_t d = 0; d < c.dims.size(); ++d)
        betti.push_back(static_cast<std::int64_t>(c.dims[d]) - static_cast<std::int64_t>(ranks[d]) -
                        static_cast<std::int64_t>(ranks[d + 1]));
    return betti;
}

/// Betti numbers over Q (p = 0) or GF(p).
inline std::vector<std::int64_t> betti_over_field(const ChainComplex& c, std::uint32_t p)
{
    return betti_from_ranks(c, boundary_ranks(c, p));
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace detail {

using SparseRow = std::vector<std::pair<std::uint32_t, BigInt>>;

/// row_a -= q * row_b, both sorted by column.
inline SparseRow axpy(const SparseRow& a, const BigInt& q, const SparseRow& b)
{
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t x = 0;
    std::size_t y = 0;
    while (x < a.size() || y < b.size()) {
        if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
            out.push_back(a[x++]);
        } else if (x == a.size() || b[y].first < a[x].first) {
            out.push_back({b[y].first, BigInt(-q * b[y].second)});
            ++y;
        } else {
            BigInt v = a[x].second - q * b[y].second;
            if (v != 0)
                out.push_back({a[x].first, std::move(v)});
            ++x;
            ++y;
        }
    }
    return out;
}

/// Dense SNF of a small remainder; returns the nonzero diagonal (unnormalized).
inline std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry in the trailing block becomes the pivot.
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 &&
                        (!best || abs(m[i][j]) < abs(m[best->first][best->second])))
                        best = {i, j};
            if (!best)
                return diag;
            std::swap(m[t], m[best->first]);
            for (auto& row : m)
                std::swap(row[t], row[best->second]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                const BigInt q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                const BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        diag.push_back(abs(m[t][t]));
    }
    return diag;
}

} // namespace detail

/// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
inline std::vector<BigInt> smith_normal_form(const SparseIntMatrix& a)
{
    // Row-major copy; columns are tracked through per-column counts.
    std::vector<detail::SparseRow> rows(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (const auto& [r, v] : a.column(j))
            rows[r].push_back({static_cast<std::uint32_t>(j), BigInt(v)});

    std::vector<bool> row_alive(a.rows(), true);
    std::vector<BigInt> diag;

    // Phase 1: eliminate along +-1 pivots, preferring sparse rows and columns.
    for (;;) {
        std::vector<std::size_t> col_count(a.cols(), 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (row_alive[i])
                for (const auto& e : rows[i])
                    ++col_count[e.first];

        std::optional<std::pair<std::size_t, std::uint32_t>> pivot;
        std::size_t best_cost = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!row_alive[i])
                continue;
            for (const auto& [j, v] : rows[i]) {
                if (v != 1 && v != -1)
                    continue;
                const std::size_t cost = (rows[i].size() - 1) * (col_count[j] - 1);
                if (!pivot || cost < best_cost) {
                    pivot = {i, j};
                    best_cost = cost;
                }
            }
        }
        if (!pivot)
            break;

        const auto [pi, pj] = *pivot;
        const detail::SparseRow prow = rows[pi];
        BigInt pv;
        for (const auto& [j, v] : prow)
            if (j == pj)
                pv = v;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!row_alive[i] || i == pi)
                continue;
            auto it = std::lower_bound(rows[i].begin(), rows[i].end(), pj,
                                       [](const auto& e, std::uint32_t col) { return e.first < col; });
            if (it == rows[i].end() || it->first != pj)
                continue;
            const BigInt q = it->second * pv; // pv is +-1, so this is the exact quotient
            rows[i] = detail::axpy(rows[i], q, prow);
        }
        row_alive[pi] = false;
        diag.push_back(1);
        // Column pj is now zero outside the pivot row; column operations clear
        // the rest of the pivot row without touching anything else.
    }

    // Phase 2: the remainder is usually tiny; finish densely.
    std::vector<std::uint32_t> live_cols;
    {
        std::vector<bool> used(a.cols(), false);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (row_alive[i])
                for (const auto& e : rows[i])
                    used[e.first] = true;
        for (std::uint32_t j = 0; j < a.cols(); ++j)
            if (used[j])
                live_cols.push_back(j);
    }
    std::vector<std::vector<BigInt>> rest;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!row_alive[i] || rows[i].empty())
            continue;
        std::vector<BigInt> dense(live_cols.size());
        for (const auto& [j, v] : rows[i]) {
            auto pos = std::lower_bound(live_cols.begin(), live_cols.end(), j) - live_cols.begin();
            dense[static_cast<std::size_t>(pos)] = v;
        }
        rest.push_back(std::move(dense));
    }
    for (auto& d : detail::dense_smith_diagonal(std::move(rest)))
        diag.push_back(std::move(d));

    // Normalize to a divisibility chain.
    std::sort(diag.begin(), diag.end());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const BigInt g = gcd(diag[i], diag[j]);
            const BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    return diag;
}

// ---------------------------------------------------------------------------
// Homology groups

struct HomologyGroup {
    std::uint64_t betti = 0;
    /// Number of Z/2 summands.
    std::uint64_t torsion2 = 0;
    /// Orders of every other cyclic prime-power summand, ascending.
    std::vector<BigInt> other_torsion;

    bool trivial() const noexcept { return betti == 0 && torsion2 == 0 && other_torsion.empty(); }

    /// "0", "Z", "Z^3 + Z/2", "Z^6 + (Z/2)^5", ...
    std::string to_string() const
    {
        std::vector<std::string> parts;
        if (betti == 1)
            parts.push_back("Z");
        else if (betti > 1)
            parts.push_back("Z^" + std::to_string(betti));
        if (torsion2 == 1)
            parts.push_back("Z/2");
        else if (torsion2 > 1)
            parts.push_back("(Z/2)^" + std::to_string(torsion2));
        for (const auto& q : other_torsion)
            parts.push_back("Z/" + q.str());
        if (parts.empty())
            return "0";
        std::string out = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i)
            out += " + " + parts[i];
        return out;
    }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

namespace detail {

/// Splits d into prime-power factors, appending 2s to `twos` and the rest to `others`.
inline void split_torsion(BigInt d, std::uint64_t& twos, std::vector<BigInt>& others)
{
    for (BigInt p = 2; p * p <= d; ++p) {
        if (d % p != 0)
            continue;
        BigInt q = 1;
        while (d % p == 0) {
            d /= p;
            q *= p;
        }
        if (q == 2)
            ++twos;
        else
            others.push_back(q);
    }
    if (d > 1) {
        if (d == 2)
            ++twos;
        else
            others.push_back(d);
    }
}

} // namespace detail

/// Largest chain-group dimension integer_homology accepts by default (St_5).
inline constexpr std::size_t kDefaultSnfCap = 480;

inline std::vector<HomologyGroup> integer_homology(const ChainComplex& c, std::size_t max_dim = kDefaultSnfCap)
{
    for (auto d : c.dims)
        if (d > max_dim)
            fail(ErrorKind::SizeLimitExceeded, "chain group of rank " + std::to_string(d) +
                                                   " exceeds the Smith normal form cap " + std::to_string(max_dim));

    std::vector<std::vector<BigInt>> factors(c.dims.size() + 1);
    for (std::size_t d = 1; d < c.dims.size(); ++d)
        factors[d] = smith_normal_form(c.boundaries[d - 1]);

    std::vector<HomologyGroup> out;
    for (std::size_t d = 0; d < c.dims.size(); ++d) {
        HomologyGroup h;
        const auto rank_in = static_cast<std::int64_t>(factors[d].size());
        const auto rank_out = static_cast<std::int64_t>(factors[d + 1].size());
        h.betti = static_cast<std::uint64_t>(static_cast<std::int64_t>(c.dims[d]) - rank_in - rank_out);
        for (const auto& f : factors[d + 1])
            if (f > 1)
                detail::split_torsion(f, h.torsion2, h.other_torsion);
        std::sort(h.other_torsion.begin(), h.other_torsion.end());
        out.push_back(std::move(h));
    }
    return out;
}

inline BigInt binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// H_m(K_n(S^1); Z) from the closed form.
inline HomologyGroup closed_form_homology(int n, int m)
{
    if (n < 2 || m < 0)
        fail(ErrorKind::InvalidRange, "need n >= 2 and m >= 0, got n=" + std::to_string(n) + ", m=" +
                                          std::to_string(m));
    HomologyGroup h;
    if (m == 0) {
        h.betti = 1;
    } else if (m % 2 == 0 && m <= n - 1) {
        h.betti = binomial(n - 1, m).convert_to<std::uint64_t>();
        BigInt t = 0;
        for (int i = 0; i <= n - m - 2; ++i)
            t += binomial(n - 1, i);
        h.torsion2 = t.convert_to<std::uint64_t>();
    }
    return h;
}

// ---------------------------------------------------------------------------
// Verification against the closed form

struct HomologyOptions {
    /// SNF runs for n up to this value.
    int snf_cap_n = 5;
    /// Primes probed in addition to Q. 2 is checked through universal
    /// coefficients, odd primes must reproduce the rational Betti numbers.
    std::vector<std::uint32_t> primes{2, 3};
};

struct DegreeReport {
    int degree = 0;
    HomologyGroup expected;
    std::int64_t betti_q = 0;
    /// Betti numbers over GF(p), keyed by p.
    std::map<std::uint32_t, std::int64_t> betti_mod;
    /// Z/2 count: from SNF when it ran, else inferred from the GF(2) ranks.
    std::int64_t torsion2 = 0;
    std::optional<HomologyGroup> integer;
    /// Named checks, e.g. "q", "gf2", "gf3", "snf".
    std::map<std::string, bool> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
    }
};

struct HomologyReport {
    int n = 0;
    std::vector<std::size_t> dims;
    bool square_zero = false;
    bool snf_ran = false;
    std::vector<DegreeReport> degrees;

    bool passed() const
    {
        return square_zero && std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.passed(); });
    }
};

inline HomologyReport verify_homology(int n, const HomologyOptions& options = {})
{
    if (n < 2)
        fail(ErrorKind::InvalidRange, "homology verification needs n >= 2");

    const StateComplex st = build_state_complex(n);
    const ChainComplex c = boundary_matrices(st.complex);

    HomologyReport report;
    report.n = n;
    report.dims = c.dims;
    report.square_zero = c.square_zero();

    const auto betti_q = betti_over_field(c, 0);
    std::map<std::uint32_t, std::vector<std::int64_t>> betti_mod;
    for (auto p : options.primes)
        betti_mod[p] = betti_over_field(c, p);

    std::optional<std::vector<HomologyGroup>> integer;
    if (n <= options.snf_cap_n) {
        std::size_t largest = 0;
        for (auto d : c.dims)
            largest = std::max(largest, d);
        integer = integer_homology(c, largest);
        report.snf_ran = true;
    }

    std::int64_t inferred_prev = 0;
    for (std::size_t d = 0; d < c.dims.size(); ++d) {
        DegreeReport deg;
        deg.degree = static_cast<int>(d);
        deg.expected = closed_form_homology(n, static_cast<int>(d));
        deg.betti_q = betti_q[d];
        deg.checks["q"] = betti_q[d] == static_cast<std::int64_t>(deg.expected.betti);

        const auto t_expected = static_cast<std::int64_t>(deg.expected.torsion2);
        const std::int64_t t_expected_prev =
            d == 0 ? 0 : static_cast<std::int64_t>(closed_form_homology(n, static_cast<int>(d) - 1).torsion2);

        for (auto p : options.primes) {
            const std::int64_t b = betti_mod[p][d];
            deg.betti_mod[p] = b;
            if (p == 2)
                deg.checks["gf2"] = b == betti_q[d] + t_expected + t_expected_prev;
            else
                deg.checks["gf" + std::to_string(p)] = b == betti_q[d];
        }

        if (integer) {
            deg.integer = (*integer)[d];
            deg.torsion2 = static_cast<std::int64_t>(deg.integer->torsion2);
            deg.checks["snf"] = *deg.integer == deg.expected;
        } else if (betti_mod.count(2) != 0) {
            deg.torsion2 = (betti_mod[2][d] - betti_q[d]) - inferred_prev;
        }
        inferred_prev = deg.torsion2;
        report.degrees.push_back(std::move(deg));
    }
    return report;
}

} // namespace curvature
