#pragma once

// Cluster structures c : {1..n} -> {+-1..+-m} and the maps built from them.
//
// Conventions used throughout: point positions are 0-based (position 0 is
// the anchor x_1), while cluster labels |c(i)| and simplex corners k are
// 1-based, matching the values stored in the structure.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvature/circle.hpp"
#include "curvature/errors.hpp"
#include "curvature/rational.hpp"

namespace curvature {

/// Throws InvalidClusterStructure naming the violated clause.
inline void validate_cluster_structure(std::span<const int> values, int m)
{
    if (values.empty())
        fail(ErrorKind::InvalidClusterStructure, "empty structure");
    if (m < 1 || m > static_cast<int>(values.size()))
        fail(ErrorKind::InvalidClusterStructure, "degrees of freedom m=" + std::to_string(m) +
                                                     " outside [1, n=" + std::to_string(values.size()) + "]");
    if (values[0] != 1)
        fail(ErrorKind::InvalidClusterStructure, "c(1) must be +1, got " + std::to_string(values[0]));
    std::vector<bool> hit(static_cast<std::size_t>(m) + 1, false);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int v = values[i];
        if (v == 0 || std::abs(v) > m)
            fail(ErrorKind::InvalidClusterStructure, "value " + std::to_string(v) + " at position " +
                                                         std::to_string(i + 1) + " outside +-1..+-" +
                                                         std::to_string(m));
        hit[static_cast<std::size_t>(std::abs(v))] = true;
    }
    for (int j = 1; j <= m; ++j) {
        if (!hit[static_cast<std::size_t>(j)])
            fail(ErrorKind::InvalidClusterStructure, "|c| is not surjective: cluster " + std::to_string(j) +
                                                         " is never hit");
    }
}

class ClusterStructure {
public:
    ClusterStructure(std::vector<int> values, int m) : values_(std::move(values)), m_(m)
    {
        validate_cluster_structure(values_, m_);
    }

    /// m is inferred as the largest |c(i)|.
    explicit ClusterStructure(std::vector<int> values) : ClusterStructure(values, infer_m(values)) {}

    std::size_t n() const noexcept { return values_.size(); }
    int m() const noexcept { return m_; }
    int operator[](std::size_t i) const { return values_[i]; }
    int label(std::size_t i) const { return std::abs(values_[i]); }
    int sign(std::size_t i) const { return values_[i] > 0 ? 1 : -1; }
    const std::vector<int>& values() const noexcept { return values_; }

    friend bool operator==(const ClusterStructure&, const ClusterStructure&) = default;
    friend std::strong_ordering operator<=>(const ClusterStructure& a, const ClusterStructure& b)
    {
        return a.values_ <=> b.values_;
    }

private:
    static int infer_m(const std::vector<int>& values)
    {
        int m = 0;
        for (int v : values)
            m = std::max(m, std::abs(v));
        return m;
    }

    std::vector<int> values_;
    int m_;
};

/// A point of the (m-1)-simplex: m exact coordinates in [0,1] summing to 1.
class BarycentricPoint {
public:
    explicit BarycentricPoint(std::vector<Rational> coords) : coords_(std::move(coords))
    {
        if (coords_.empty())
            fail(ErrorKind::InvalidArgument, "barycentric point needs at least one coordinate");
        Rational total = 0;
        for (const auto& t : coords_) {
            if (t < 0 || t > 1)
                fail(ErrorKind::InvalidArgument, "barycentric coordinate " + format_rational(t) + " outside [0,1]");
            total += t;
        }
        if (total != 1)
            fail(ErrorKind::InvalidArgument, "barycentric coordinates sum to " + format_rational(total) + ", not 1");
    }

    BarycentricPoint(std::initializer_list<Rational> coords) : BarycentricPoint(std::vector<Rational>(coords)) {}

    /// The k-th standard corner (1-based) of the (m-1)-simplex.
    static BarycentricPoint corner(int m, int k)
    {
        if (m < 1 || k < 1 || k > m)
            fail(ErrorKind::IndexOutOfRange, "corner " + std::to_string(k) + " of a simplex with " +
                                                 std::to_string(m) + " vertices");
        std::vector<Rational> coords(static_cast<std::size_t>(m));
        coords[static_cast<std::size_t>(k - 1)] = 1;
        return BarycentricPoint(std::move(coords));
    }

    std::size_t size() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    /// 1-based indices of the strictly positive coordinates.
    std::vector<int> support() const
    {
        std::vector<int> out;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] > 0)
                out.push_back(static_cast<int>(i) + 1);
        }
        return out;
    }

    friend bool operator==(const BarycentricPoint&, const BarycentricPoint&) = default;

private:
    std::vector<Rational> coords_;
};

/// S_j(t) = t_1 + ... + t_{j-1}, so S_1 = 0 and S_{m+1} = 1.
inline Rational prefix_sum(const BarycentricPoint& t, int j)
{
    if (j < 1 || j > static_cast<int>(t.size()) + 1)
        fail(ErrorKind::IndexOutOfRange, "prefix index " + std::to_string(j) + " outside [1, " +
                                             std::to_string(t.size() + 1) + "]");
    Rational s = 0;
    for (int i = 0; i < j - 1; ++i)
        s += t[static_cast<std::size_t>(i)];
    return s;
}

namespace detail {

/// All prefix sums S_1..S_{m+1} at once.
inline std::vector<Rational> prefix_sums(const BarycentricPoint& t)
{
    std::vector<Rational> s(t.size() + 1);
    for (std::size_t i = 0; i < t.size(); ++i)
        s[i + 1] = s[i] + t[i];
    return s;
}

inline void require_dimension(const ClusterStructure& c, const BarycentricPoint& t)
{
    if (static_cast<int>(t.size()) != c.m())
        fail(ErrorKind::DimensionMismatch, "structure has m=" + std::to_string(c.m()) +
                                               " but barycentric point has " + std::to_string(t.size()) +
                                               " coordinates");
}

/// (t_{k_1}, ..., t_{k_l}) for a sorted 1-based index set I = {k_1 < ... < k_l}.
inline BarycentricPoint compress(const BarycentricPoint& t, std::span<const int> indices)
{
    std::vector<Rational> s;
    s.reserve(indices.size());
    for (int k : indices)
        s.push_back(t[static_cast<std::size_t>(k - 1)]);
    return BarycentricPoint(std::move(s));
}

} // namespace detail

/// Phi_c(t): x_i = sign(c(i)) * exp(pi i S_{|c(i)|}(t)).
inline Configuration phi(const ClusterStructure& c, const BarycentricPoint& t)
{
    detail::require_dimension(c, t);
    const auto s = detail::prefix_sums(t);
    std::vector<CirclePoint> points;
    points.reserve(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) {
        const CirclePoint p(s[static_cast<std::size_t>(c.label(i) - 1)]);
        points.push_back(c.sign(i) > 0 ? p : p.antipode());
    }
    return Configuration(std::move(points));
}

struct InducedCluster {
    ClusterStructure structure;
    BarycentricPoint t;

    friend bool operator==(const InducedCluster&, const InducedCluster&) = default;
};

/// The cluster structure c_x induced by a normalized configuration, together
/// with the interior point t satisfying phi(c_x, t) = x.
inline InducedCluster induced_cluster(const Configuration& x)
{
    if (x[0].angle() != 0)
        fail(ErrorKind::NotNormalized, "first point must be at angle 0, got " + format_rational(x[0].angle()));

    const Configuration folded = fold(x);
    std::vector<Rational> levels = folded.angles();
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<int> values(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto it = std::lower_bound(levels.begin(), levels.end(), folded[i].angle());
        const int cluster = static_cast<int>(it - levels.begin()) + 1;
        values[i] = chirality(x[i]) * cluster;
    }

    std::vector<Rational> t;
    t.reserve(levels.size());
    for (std::size_t j = 0; j + 1 < levels.size(); ++j)
        t.emplace_back(levels[j + 1] - levels[j]);
    t.emplace_back(1 - levels.back());

    const int m = static_cast<int>(levels.size());
    return {ClusterStructure(std::move(values), m), BarycentricPoint(std::move(t))};
}

/// v^(k)(c): coordinate i is sign(c(i)) when |c(i)| <= k and -sign(c(i)) otherwise.
inline Configuration vertex(const ClusterStructure& c, int k)
{
    if (k < 1 || k > c.m())
        fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(k) + " of a structure with m=" +
                                             std::to_string(c.m()));
    std::vector<CirclePoint> points;
    points.reserve(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) {
        const int s = c.label(i) <= k ? c.sign(i) : -c.sign(i);
        points.emplace_back(Rational(s > 0 ? 0 : 1));
    }
    return Configuration(std::move(points));
}

inline std::vector<Configuration> vertex_set(const ClusterStructure& c)
{
    std::vector<Configuration> out;
    out.reserve(static_cast<std::size_t>(c.m()));
    for (int k = 1; k <= c.m(); ++k)
        out.push_back(vertex(c, k));
    return out;
}

/// The restriction c_I for a strictly increasing 1-based index set I.
inline ClusterStructure restrict_to(const ClusterStructure& c, std::span<const int> indices)
{
    if (indices.empty())
        fail(ErrorKind::EmptyIndexSet, "restriction needs a nonempty index set");
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] < 1 || indices[j] > c.m() || (j > 0 && indices[j] <= indices[j - 1]))
            fail(ErrorKind::IndexOutOfRange, "index set must be strictly increasing within [1, " +
                                                 std::to_string(c.m()) + "]");
    }

    std::vector<int> values(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) {
        const int label = c.label(i);
        const auto it = std::lower_bound(indices.begin(), indices.end(), label);
        if (it == indices.end()) {
            values[i] = -c.sign(i);
        } else {
            values[i] = c.sign(i) * (static_cast<int>(it - indices.begin()) + 1);
        }
    }
    return ClusterStructure(std::move(values), static_cast<int>(indices.size()));
}

inline ClusterStructure restrict_to(const ClusterStructure& c, std::initializer_list<int> indices)
{
    return restrict_to(c, std::span<const int>(indices.begin(), indices.size()));
}

/// rho . c: labels 2..m are reversed (j -> m+2-j) with flipped sign; label 1 is fixed.
inline ClusterStructure transpose(const ClusterStructure& c)
{
    std::vector<int> values(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) {
        const int label = c.label(i);
        values[i] = label == 1 ? c[i] : -c.sign(i) * (c.m() + 2 - label);
    }
    return ClusterStructure(std::move(values), c.m());
}

inline BarycentricPoint reverse_barycentric(const BarycentricPoint& t)
{
    std::vector<Rational> coords(t.coords().rbegin(), t.coords().rend());
    return BarycentricPoint(std::move(coords));
}

/// Distance between points i and j of phi(c, t), read off the structure alone.
inline Rational predicted_distance(const ClusterStructure& c, const BarycentricPoint& t, std::size_t i, std::size_t j)
{
    detail::require_dimension(c, t);
    if (i >= c.n() || j >= c.n())
        fail(ErrorKind::IndexOutOfRange, "point index outside [0, " + std::to_string(c.n()) + ")");
    Rational gap = prefix_sum(t, c.label(j)) - prefix_sum(t, c.label(i));
    if (gap < 0)
        gap = -gap;
    return c.sign(i) == c.sign(j) ? gap : Rational(1 - gap);
}

using ConvexDecomposition = std::vector<std::pair<Rational, DistanceMatrix>>;

/// [(t_k, D(v^(k)(c)))]: the weighted vertex matrices whose sum is D(phi(c, t)).
inline ConvexDecomposition convex_decomposition(const ClusterStructure& c, const BarycentricPoint& t)
{
    detail::require_dimension(c, t);
    ConvexDecomposition out;
    out.reserve(t.size());
    for (int k = 1; k <= c.m(); ++k)
        out.emplace_back(t[static_cast<std::size_t>(k - 1)], distance_matrix(vertex(c, k)));
    return out;
}

/// Sum of coefficient-weighted matrices. Weights must form a convex combination.
inline DistanceMatrix combine(const ConvexDecomposition& terms)
{
    if (terms.empty())
        fail(ErrorKind::InvalidArgument, "empty convex combination");
    const std::size_t n = terms.front().second.size();
    std::vector<Rational> entries(n * n);
    for (const auto& [weight, matrix] : terms) {
        if (matrix.size() != n)
            fail(ErrorKind::DimensionMismatch, "matrices of different sizes in a combination");
        for (std::size_t e = 0; e < n * n; ++e) {
            if (matrix.entries()[e] != 0)
                entries[e] += weight * matrix.entries()[e];
        }
    }
    return DistanceMatrix(n, std::move(entries));
}

} // namespace curvature
