#pragma once

// The State Complex St_n(S^1): one simplex V(c) for every cluster structure c,
// with c and its transpose sharing the same simplex.
//
// Vertices are the sign vectors (+1, +-1, ..., +-1). Vertex i of St_n is the
// sign vector whose bits spell i: bit (p-1) is set when coordinate p (0-based,
// p >= 1) is -1. Simplices are stored as 128-bit vertex sets, which covers
// every n <= 8.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvature/circle.hpp"
#include "curvature/cluster.hpp"
#include "curvature/errors.hpp"
#include "curvature/rational.hpp"

namespace curvature {

inline constexpr int kMaxStateComplexN = 8;

/// Set of vertex indices in [0, 128).
struct VertexSet {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr std::uint32_t capacity = 128;

    void insert(std::uint32_t v) noexcept
    {
        if (v < 64)
            lo |= std::uint64_t{1} << v;
        else
            hi |= std::uint64_t{1} << (v - 64);
    }

    void erase(std::uint32_t v) noexcept
    {
        if (v < 64)
            lo &= ~(std::uint64_t{1} << v);
        else
            hi &= ~(std::uint64_t{1} << (v - 64));
    }

    bool contains(std::uint32_t v) const noexcept
    {
        return v < 64 ? ((lo >> v) & 1U) != 0 : ((hi >> (v - 64)) & 1U) != 0;
    }

    int size() const noexcept { return std::popcount(lo) + std::popcount(hi); }
    bool empty() const noexcept { return lo == 0 && hi == 0; }

    bool is_subset_of(const VertexSet& other) const noexcept
    {
        return (lo & ~other.lo) == 0 && (hi & ~other.hi) == 0;
    }

    std::vector<std::uint32_t> to_vector() const
    {
        std::vector<std::uint32_t> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t w = lo; w != 0; w &= w - 1)
            out.push_back(static_cast<std::uint32_t>(std::countr_zero(w)));
        for (std::uint64_t w = hi; w != 0; w &= w - 1)
            out.push_back(static_cast<std::uint32_t>(64 + std::countr_zero(w)));
        return out;
    }

    friend VertexSet operator&(const VertexSet& a, const VertexSet& b) noexcept
    {
        return {a.lo & b.lo, a.hi & b.hi};
    }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Orders by size, then lexicographically on the sorted index tuples.
struct LexLess {
    bool operator()(const VertexSet& a, const VertexSet& b) const noexcept
    {
        const int sa = a.size();
        const int sb = b.size();
        if (sa != sb)
            return sa < sb;
        // The smaller tuple is the one owning the lowest index where they differ.
        const std::uint64_t dlo = a.lo ^ b.lo;
        if (dlo != 0)
            return (a.lo & (dlo & (~dlo + 1))) != 0;
        const std::uint64_t dhi = a.hi ^ b.hi;
        if (dhi != 0)
            return (a.hi & (dhi & (~dhi + 1))) != 0;
        return false;
    }
};

/// Sign vector (+1, s_2, ..., s_n) packed into n-1 bits.
struct SignVertex {
    std::uint32_t bits = 0;
    int n = 1;

    static SignVertex from_configuration(const Configuration& x)
    {
        if (x.size() > 32)
            fail(ErrorKind::SizeLimitExceeded, "sign vertices support at most 32 coordinates");
        if (x[0].angle() != 0)
            fail(ErrorKind::InvalidArgument, "sign vertex must start with +1");
        SignVertex v{0, static_cast<int>(x.size())};
        for (std::size_t i = 1; i < x.size(); ++i) {
            const Rational& a = x[i].angle();
            if (a == 1)
                v.bits |= std::uint32_t{1} << (i - 1);
            else if (a != 0)
                fail(ErrorKind::InvalidArgument, "sign vertex coordinates must be +1 or -1");
        }
        return v;
    }

    std::vector<int> signs() const
    {
        std::vector<int> out(static_cast<std::size_t>(n), 1);
        for (int i = 1; i < n; ++i)
            out[static_cast<std::size_t>(i)] = ((bits >> (i - 1)) & 1U) != 0 ? -1 : 1;
        return out;
    }

    Configuration to_configuration() const
    {
        std::vector<CirclePoint> points;
        for (int s : signs())
            points.emplace_back(Rational(s > 0 ? 0 : 1));
        return Configuration(std::move(points));
    }

    /// "+--" style rendering.
    std::string to_string() const
    {
        std::string out;
        for (int s : signs())
            out.push_back(s > 0 ? '+' : '-');
        return out;
    }

    friend bool operator==(const SignVertex&, const SignVertex&) = default;
};

class SimplicialComplex {
public:
    using Simplex = std::vector<std::uint32_t>;

    /// Builds from explicit index tuples. Tuples must be strictly increasing
    /// with d+1 entries in dimension d; closure is not enforced here (see
    /// verify_complex).
    SimplicialComplex(int n, std::vector<SignVertex> vertices, const std::vector<std::vector<Simplex>>& simplices)
        : n_(n), vertices_(std::move(vertices))
    {
        check_vertex_count();
        by_dim_.resize(simplices.size());
        for (std::size_t d = 0; d < simplices.size(); ++d) {
            for (const auto& s : simplices[d]) {
                if (s.size() != d + 1)
                    fail(ErrorKind::InvalidArgument, "simplex in dimension " + std::to_string(d) + " has " +
                                                         std::to_string(s.size()) + " vertices");
                VertexSet set;
                for (std::size_t k = 0; k < s.size(); ++k) {
                    if (s[k] >= vertices_.size())
                        fail(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(s[k]) + " out of range");
                    if (k > 0 && s[k] <= s[k - 1])
                        fail(ErrorKind::InvalidArgument, "simplex vertex indices must be strictly increasing");
                    set.insert(s[k]);
                }
                by_dim_[d].push_back(set);
            }
            std::sort(by_dim_[d].begin(), by_dim_[d].end(), LexLess{});
        }
        trim();
    }

    /// Builds from vertex sets already sorted with LexLess inside each dimension.
    static SimplicialComplex from_sorted_sets(int n, std::vector<SignVertex> vertices,
                                              std::vector<std::vector<VertexSet>> by_dim)
    {
        SimplicialComplex k;
        k.n_ = n;
        k.vertices_ = std::move(vertices);
        k.check_vertex_count();
        k.by_dim_ = std::move(by_dim);
        k.trim();
        return k;
    }

    int n() const noexcept { return n_; }
    const std::vector<SignVertex>& vertices() const noexcept { return vertices_; }

    /// Top dimension, or -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

    std::size_t size(int d) const
    {
        return d >= 0 && d < static_cast<int>(by_dim_.size()) ? by_dim_[static_cast<std::size_t>(d)].size() : 0;
    }

    std::vector<std::uint64_t> f_vector() const
    {
        std::vector<std::uint64_t> f;
        for (const auto& level : by_dim_)
            f.push_back(level.size());
        return f;
    }

    const std::vector<VertexSet>& sets(int d) const { return by_dim_.at(static_cast<std::size_t>(d)); }
    const VertexSet& set(int d, std::size_t i) const { return sets(d)[i]; }
    Simplex simplex(int d, std::size_t i) const { return set(d, i).to_vector(); }

    std::optional<std::size_t> index_of(const VertexSet& s) const
    {
        const int d = s.size() - 1;
        if (d < 0 || d > dimension())
            return std::nullopt;
        const auto& level = by_dim_[static_cast<std::size_t>(d)];
        auto it = std::lower_bound(level.begin(), level.end(), s, LexLess{});
        if (it == level.end() || !(*it == s))
            return std::nullopt;
        return static_cast<std::size_t>(it - level.begin());
    }

    bool contains(const Simplex& s) const
    {
        VertexSet set;
        for (auto v : s) {
            if (v >= VertexSet::capacity)
                return false;
            set.insert(v);
        }
        return static_cast<std::size_t>(set.size()) == s.size() && index_of(set).has_value();
    }

private:
    SimplicialComplex() = default;

    void check_vertex_count() const
    {
        if (vertices_.size() > VertexSet::capacity)
            fail(ErrorKind::SizeLimitExceeded, "at most 128 vertices are supported");
    }

    void trim()
    {
        while (!by_dim_.empty() && by_dim_.back().empty())
            by_dim_.pop_back();
    }

    int n_ = 0;
    std::vector<SignVertex> vertices_;
    std::vector<std::vector<VertexSet>> by_dim_;
};

// ---------------------------------------------------------------------------
// Enumeration and counting

/// Calls `visit(std::span<const int>)` for every (m,n)-cluster structure, in
/// lexicographic order of the signed value lists. The span is only valid for
/// the duration of the call.
template <class Visitor>
void for_each_cluster_structure(int n, int m, Visitor&& visit)
{
    if (n < 1 || m < 1 || m > n)
        fail(ErrorKind::InvalidRange, "need 1 <= m <= n, got n=" + std::to_string(n) + ", m=" + std::to_string(m));

    std::vector<int> values(static_cast<std::size_t>(n), 0);
    std::vector<int> hits(static_cast<std::size_t>(m) + 1, 0);
    values[0] = 1;
    hits[1] = 1;
    int missing = m - 1;

    auto recurse = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            visit(std::span<const int>(values));
            return;
        }
        const int remaining_after = n - pos - 1;
        for (int v = -m; v <= m; ++v) {
            if (v == 0)
                continue;
            const auto label = static_cast<std::size_t>(v < 0 ? -v : v);
            const int fresh = hits[label] == 0 ? 1 : 0;
            if (missing - fresh > remaining_after)
                continue;
            values[static_cast<std::size_t>(pos)] = v;
            ++hits[label];
            missing -= fresh;
            self(self, pos + 1);
            missing += fresh;
            --hits[label];
        }
    };
    recurse(recurse, 1);
}

inline std::vector<ClusterStructure> enumerate_cluster_structures(int n, int m)
{
    std::vector<ClusterStructure> out;
    for_each_cluster_structure(n, m, [&](std::span<const int> values) {
        out.emplace_back(std::vector<int>(values.begin(), values.end()), m);
    });
    return out;
}

/// Stirling numbers of the second kind from S(n+1,k) = k S(n,k) + S(n,k-1)
/// with S(n,n) = 1 and S(n,0) = S(0,n) = 0 for n > 0.
inline BigInt stirling2(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        fail(ErrorKind::InvalidRange, "need 0 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
    std::vector<BigInt> row{1}; // row 0
    for (int r = 1; r <= n; ++r) {
        std::vector<BigInt> next(static_cast<std::size_t>(r) + 1);
        next[static_cast<std::size_t>(r)] = 1;
        for (int j = 1; j < r; ++j)
            next[static_cast<std::size_t>(j)] = BigInt(j) * row[static_cast<std::size_t>(j)] +
                                                row[static_cast<std::size_t>(j - 1)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

inline BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline BigInt pow2(int e)
{
    BigInt p = 1;
    p <<= e;
    return p;
}

/// Number of (m,n)-cluster structures: 2^(n-1) (m-1)! S(n,m).
inline BigInt cluster_structure_count(int n, int m)
{
    if (n < 1 || m < 1 || m > n)
        fail(ErrorKind::InvalidRange, "need 1 <= m <= n, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
    return pow2(n - 1) * factorial(m - 1) * stirling2(n, m);
}

/// Face numbers f(n,0..n-1) of St_n(S^1) from the closed formula.
inline std::vector<BigInt> f_vector(int n)
{
    if (n < 1)
        fail(ErrorKind::InvalidRange, "n must be positive");
    if (n == 1)
        return {BigInt(1)};
    std::vector<BigInt> f{pow2(n - 1)};
    for (int m = 1; m <= n - 1; ++m)
        f.push_back(pow2(n - 2) * factorial(m) * stirling2(n, m + 1));
    return f;
}

inline BigInt euler_characteristic(std::span<const std::uint64_t> f)
{
    BigInt chi = 0;
    for (std::size_t d = 0; d < f.size(); ++d) {
        if (d % 2 == 0)
            chi += BigInt(f[d]);
        else
            chi -= BigInt(f[d]);
    }
    return chi;
}

inline BigInt euler_characteristic(const SimplicialComplex& k)
{
    const auto f = k.f_vector();
    return euler_characteristic(std::span<const std::uint64_t>(f));
}

// ---------------------------------------------------------------------------
// Assembly

namespace detail {

/// V(c) as a vertex set, computed straight from the value list.
inline VertexSet simplex_of(std::span<const int> values, int m)
{
    VertexSet set;
    for (int k = 1; k <= m; ++k) {
        std::uint32_t bits = 0;
        for (std::size_t i = 1; i < values.size(); ++i) {
            const int v = values[i];
            const int label = v < 0 ? -v : v;
            const bool negative = label <= k ? v < 0 : v > 0;
            if (negative)
                bits |= std::uint32_t{1} << (i - 1);
        }
        set.insert(bits);
    }
    return set;
}

inline bool is_self_transpose(std::span<const int> values, int m)
{
    for (int v : values) {
        const int label = v < 0 ? -v : v;
        if (label == 1)
            continue;
        const int sign = v < 0 ? -1 : 1;
        if (-sign * (m + 2 - label) != v)
            return false;
    }
    return true;
}

inline std::vector<SignVertex> all_sign_vertices(int n)
{
    std::vector<SignVertex> vertices;
    const std::uint32_t count = std::uint32_t{1} << (n - 1);
    vertices.reserve(count);
    for (std::uint32_t b = 0; b < count; ++b)
        vertices.push_back(SignVertex{b, n});
    return vertices;
}

} // namespace detail

struct StateComplex {
    SimplicialComplex complex;
    /// Raw number of cluster structures feeding each dimension.
    std::vector<std::uint64_t> structure_counts;
    /// Simplices not produced by exactly one structure (d = 0) or exactly two (d >= 1).
    std::uint64_t merge_anomalies = 0;
    /// Structures with m >= 2 equal to their own transpose.
    std::uint64_t self_transposes = 0;
    /// Per dimension and simplex, the smaller of {c, transpose(c)}. Empty unless requested.
    std::vector<std::vector<ClusterStructure>> labels;
};

inline StateComplex build_state_complex(int n, bool with_labels = false)
{
    if (n < 1)
        fail(ErrorKind::InvalidRange, "n must be positive");
    if (n > kMaxStateComplexN)
        fail(ErrorKind::SizeLimitExceeded, "state complexes are supported up to n=" +
                                               std::to_string(kMaxStateComplexN));

    StateComplex out{SimplicialComplex::from_sorted_sets(n, detail::all_sign_vertices(n), {}), {}, 0, 0, {}};
    std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(n));
    out.structure_counts.assign(static_cast<std::size_t>(n), 0);
    if (with_labels)
        out.labels.resize(static_cast<std::size_t>(n));

    for (int m = 1; m <= n; ++m) {
        const auto d = static_cast<std::size_t>(m - 1);
        const std::uint64_t expected_multiplicity = m == 1 ? 1 : 2;

        std::vector<VertexSet> raw;
        std::vector<std::pair<VertexSet, std::vector<int>>> labelled;
        raw.reserve(static_cast<std::size_t>(cluster_structure_count(n, m)));
        for_each_cluster_structure(n, m, [&](std::span<const int> values) {
            const VertexSet s = detail::simplex_of(values, m);
            raw.push_back(s);
            if (with_labels)
                labelled.emplace_back(s, std::vector<int>(values.begin(), values.end()));
            if (m >= 2 && detail::is_self_transpose(values, m))
                ++out.self_transposes;
        });
        out.structure_counts[d] = raw.size();

        std::sort(raw.begin(), raw.end(), LexLess{});
        auto& level = by_dim[d];
        for (std::size_t i = 0; i < raw.size();) {
            std::size_t j = i;
            while (j < raw.size() && raw[j] == raw[i])
                ++j;
            if (j - i != expected_multiplicity)
                ++out.merge_anomalies;
            level.push_back(raw[i]);
            i = j;
        }

        if (with_labels) {
            std::sort(labelled.begin(), labelled.end(), [](const auto& a, const auto& b) {
                if (!(a.first == b.first))
                    return LexLess{}(a.first, b.first);
                return a.second < b.second;
            });
            auto& labels = out.labels[d];
            for (std::size_t i = 0; i < labelled.size(); ++i) {
                if (i == 0 || !(labelled[i].first == labelled[i - 1].first))
                    labels.emplace_back(labelled[i].second, m);
            }
        }
    }

    out.complex = SimplicialComplex::from_sorted_sets(n, detail::all_sign_vertices(n), std::move(by_dim));
    return out;
}

// ---------------------------------------------------------------------------
// Locating matrices

inline std::uint32_t vertex_index(const Configuration& sign_vector)
{
    return SignVertex::from_configuration(sign_vector).bits;
}

struct MinimalSimplex {
    /// Sorted vertex indices of the carrier simplex.
    std::vector<std::uint32_t> vertices;
    /// Vertex index of v^(k)(label) for k = 1..m, aligned with `t`.
    std::vector<std::uint32_t> corners;
    /// Structure induced by `realization`; either `label` or its transpose.
    ClusterStructure structure;
    /// min(structure, transpose(structure)), the label stored for the simplex.
    ClusterStructure label;
    /// Barycentric coordinates with respect to the corners of `label`, so the
    /// answer does not depend on which reflection realize_matrix picked.
    BarycentricPoint t;
    Configuration realization;
};

/// The unique smallest simplex of St_n whose convex hull of distance
/// matrices contains M, with M's barycentric coordinates in it.
inline MinimalSimplex minimal_simplex(const DistanceMatrix& m)
{
    Configuration x = realize_matrix(m);
    InducedCluster induced = induced_cluster(x);

    ClusterStructure flipped = transpose(induced.structure);
    const bool reversed = flipped < induced.structure;
    ClusterStructure label = reversed ? flipped : induced.structure;
    BarycentricPoint t = reversed ? reverse_barycentric(induced.t) : induced.t;

    std::vector<std::uint32_t> corners;
    for (const auto& v : vertex_set(label))
        corners.push_back(vertex_index(v));
    std::vector<std::uint32_t> sorted = corners;
    std::sort(sorted.begin(), sorted.end());

    return {std::move(sorted), std::move(corners), std::move(induced.structure), std::move(label), std::move(t),
            std::move(x)};
}

// ---------------------------------------------------------------------------
// Verification

struct ComplexReport {
    std::vector<std::string> violations;
    std::size_t closure_violations = 0;
    std::size_t order_violations = 0;
    std::size_t intersection_violations = 0;
    bool intersections_checked = false;

    bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

inline std::string describe(const VertexSet& s)
{
    std::string out = "{";
    bool first = true;
    for (auto v : s.to_vector()) {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

} // namespace detail

/// Checks face closure, ordering/uniqueness, the dimension bound and, for
/// n <= max_intersection_n, that pairwise intersections are faces.
inline ComplexReport verify_complex(const SimplicialComplex& k, int max_intersection_n = 5)
{
    ComplexReport report;

    if (k.n() >= 1 && k.dimension() > k.n() - 1) {
        report.violations.push_back("dimension " + std::to_string(k.dimension()) + " exceeds n-1 = " +
                                    std::to_string(k.n() - 1));
    }

    for (int d = 0; d <= k.dimension(); ++d) {
        const auto& level = k.sets(d);
        for (std::size_t i = 1; i < level.size(); ++i) {
            if (!LexLess{}(level[i - 1], level[i])) {
                ++report.order_violations;
                report.violations.push_back("dimension " + std::to_string(d) + ": duplicate or unsorted simplex " +
                                            detail::describe(level[i]));
            }
        }
    }

    std::set<std::pair<std::uint64_t, std::uint64_t>> missing;
    for (int d = 1; d <= k.dimension(); ++d) {
        for (const auto& s : k.sets(d)) {
            for (auto v : s.to_vector()) {
                VertexSet face = s;
                face.erase(v);
                if (!k.index_of(face) && missing.insert({face.lo, face.hi}).second) {
                    ++report.closure_violations;
                    report.violations.push_back("missing face " + detail::describe(face) + " of " +
                                                detail::describe(s));
                }
            }
        }
    }

    if (k.n() <= max_intersection_n) {
        report.intersections_checked = true;
        std::vector<VertexSet> all;
        for (int d = 0; d <= k.dimension(); ++d)
            all.insert(all.end(), k.sets(d).begin(), k.sets(d).end());
        for (std::size_t a = 0; a < all.size(); ++a) {
            for (std::size_t b = a + 1; b < all.size(); ++b) {
                const VertexSet common = all[a] & all[b];
                if (common.empty() || k.index_of(common) || missing.count({common.lo, common.hi}) != 0)
                    continue;
                missing.insert({common.lo, common.hi});
                ++report.intersection_violations;
                report.violations.push_back("intersection " + detail::describe(common) + " of " +
                                            detail::describe(all[a]) + " and " + detail::describe(all[b]) +
                                            " is not a face");
            }
        }
    }
    return report;
}

} // namespace curvature
