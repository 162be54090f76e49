#pragma once

// Exact geometry of the unit circle. Angles and distances are rationals in
// units of pi: the point exp(i*pi*r) is stored as r in [0, 2), and geodesic
// distances live in [0, 1].

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "curvature/errors.hpp"
#include "curvature/rational.hpp"

namespace curvature {

class CirclePoint {
public:
    CirclePoint() = default;
    CirclePoint(const Rational& angle) : angle_(mod2(angle)) {}

    const Rational& angle() const noexcept { return angle_; }

    /// Multiplication by -1.
    CirclePoint antipode() const { return CirclePoint(Rational(angle_ + 1)); }
    /// The reflection z -> 1/z.
    CirclePoint reflected() const { return CirclePoint(Rational(-angle_)); }
    CirclePoint rotated(const Rational& by) const { return CirclePoint(Rational(angle_ + by)); }

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.angle_ == b.angle_; }

private:
    Rational angle_{0};
};

/// An ordered n-tuple of points on the circle (a point of the n-torus).
class Configuration {
public:
    explicit Configuration(std::vector<CirclePoint> points) : points_(std::move(points))
    {
        if (points_.empty())
            fail(ErrorKind::InvalidArgument, "configuration needs at least one point");
    }

    static Configuration from_angles(const std::vector<Rational>& angles)
    {
        std::vector<CirclePoint> points(angles.begin(), angles.end());
        return Configuration(std::move(points));
    }

    static Configuration from_angles(std::initializer_list<Rational> angles)
    {
        return from_angles(std::vector<Rational>(angles));
    }

    std::size_t size() const noexcept { return points_.size(); }
    const CirclePoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<CirclePoint>& points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    std::vector<Rational> angles() const
    {
        std::vector<Rational> out;
        out.reserve(points_.size());
        for (const auto& p : points_)
            out.push_back(p.angle());
        return out;
    }

    friend bool operator==(const Configuration& a, const Configuration& b) { return a.points_ == b.points_; }

private:
    std::vector<CirclePoint> points_;
};

/// Symmetric n x n matrix of geodesic distances, entries in [0, 1] (units of pi)
/// with zero diagonal. The invariant is checked on construction.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t n, std::vector<Rational> row_major) : n_(n), entries_(std::move(row_major))
    {
        if (n_ == 0)
            fail(ErrorKind::InvalidArgument, "distance matrix must be at least 1x1");
        if (entries_.size() != n_ * n_)
            fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(n_ * n_) + " entries, got " +
                                                   std::to_string(entries_.size()));
        for (std::size_t i = 0; i < n_; ++i) {
            if (at(i, i) != 0)
                fail(ErrorKind::InvalidArgument, "nonzero diagonal entry at " + std::to_string(i));
            for (std::size_t j = 0; j < n_; ++j) {
                const Rational& v = at(i, j);
                if (v < 0 || v > 1)
                    fail(ErrorKind::InvalidArgument, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                         ") = " + format_rational(v) + " outside [0,1]");
                if (v != at(j, i))
                    fail(ErrorKind::InvalidArgument, "matrix is not symmetric at (" + std::to_string(i) + "," +
                                                         std::to_string(j) + ")");
            }
        }
    }

    DistanceMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : DistanceMatrix(rows.size(), flatten(rows))
    {
    }

    static DistanceMatrix zero(std::size_t n) { return DistanceMatrix(n, std::vector<Rational>(n * n)); }

    std::size_t size() const noexcept { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }
    const std::vector<Rational>& entries() const noexcept { return entries_; }

    friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    struct Unchecked {};
    DistanceMatrix(Unchecked, std::size_t n, std::vector<Rational> row_major) : n_(n), entries_(std::move(row_major)) {}

    static std::vector<Rational> flatten(std::initializer_list<std::initializer_list<Rational>> rows)
    {
        std::vector<Rational> out;
        for (const auto& row : rows) {
            if (row.size() != rows.size())
                fail(ErrorKind::DimensionMismatch, "distance matrix rows must have length " +
                                                       std::to_string(rows.size()));
            out.insert(out.end(), row.begin(), row.end());
        }
        return out;
    }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    friend DistanceMatrix distance_matrix(const Configuration& x);

    std::size_t n_;
    std::vector<Rational> entries_;
};

/// Element of O(2): optional reflection z -> 1/z followed by a rotation.
struct Isometry {
    Rational rotation{0};
    bool reflect = false;

    Isometry() = default;
    Isometry(const Rational& rot, bool refl) : rotation(mod2(rot)), reflect(refl) {}

    static Isometry identity() { return {}; }
    static Isometry reflection() { return Isometry(0, true); }

    CirclePoint operator()(const CirclePoint& p) const
    {
        const CirclePoint base = reflect ? p.reflected() : p;
        return base.rotated(rotation);
    }

    friend bool operator==(const Isometry& a, const Isometry& b)
    {
        return a.rotation == b.rotation && a.reflect == b.reflect;
    }
};

/// `after` applied to the result of `before`.
inline Isometry compose(const Isometry& after, const Isometry& before)
{
    Rational rot = after.reflect ? Rational(-before.rotation) : before.rotation;
    return Isometry(rot + after.rotation, after.reflect != before.reflect);
}

inline Rational geodesic_distance(const CirclePoint& p, const CirclePoint& q)
{
    Rational delta = mod2(Rational(p.angle() - q.angle()));
    if (delta > 1)
        return Rational(2 - delta);
    return delta;
}

inline DistanceMatrix distance_matrix(const Configuration& x)
{
    const std::size_t n = x.size();
    std::vector<Rational> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            entries[i * n + j] = geodesic_distance(x[i], x[j]);
            entries[j * n + i] = entries[i * n + j];
        }
    }
    return DistanceMatrix(DistanceMatrix::Unchecked{}, n, std::move(entries));
}

inline Configuration apply_isometry(const Isometry& tau, const Configuration& x)
{
    std::vector<CirclePoint> out;
    out.reserve(x.size());
    for (const auto& p : x)
        out.push_back(tau(p));
    return Configuration(std::move(out));
}

/// Angle negation of every point.
inline Configuration reflect(const Configuration& x)
{
    return apply_isometry(Isometry::reflection(), x);
}

/// Finds tau in O(2) with tau(x) = y. Requires equal distance matrices.
inline Isometry recover_isometry(const Configuration& x, const Configuration& y)
{
    if (x.size() != y.size() || distance_matrix(x) != distance_matrix(y))
        fail(ErrorKind::MatricesDiffer, "configurations do not share a distance matrix");

    const Isometry candidates[] = {
        Isometry(Rational(y[0].angle() - x[0].angle()), false),
        Isometry(Rational(y[0].angle() + x[0].angle()), true),
    };
    for (const auto& tau : candidates) {
        if (apply_isometry(tau, x) == y)
            return tau;
    }
    // Unreachable for configurations on S^1 with equal distance matrices.
    fail(ErrorKind::MatricesDiffer, "no isometry maps x onto y");
}

/// Rotates so that the first point sits at angle 0.
inline Configuration normalize(const Configuration& x)
{
    return apply_isometry(Isometry(Rational(-x[0].angle()), false), x);
}

/// +1 on the half-open upper semicircle [0, pi), -1 on [pi, 2pi).
inline int chirality(const CirclePoint& p)
{
    return p.angle() < 1 ? +1 : -1;
}

/// Folds every point into the semicircle starting at x_1:
/// x~_i = chirality(x_i / x_1) * x_i.
inline Configuration fold(const Configuration& x)
{
    const Rational& base = x[0].angle();
    std::vector<CirclePoint> out;
    out.reserve(x.size());
    for (const auto& p : x) {
        CirclePoint relative(Rational(p.angle() - base));
        out.push_back(chirality(relative) > 0 ? p : p.antipode());
    }
    return Configuration(std::move(out));
}

/// Constructs x with x_1 = 1 and distance_matrix(x) = M. Of the two
/// reflection-related answers, the one with the first non-degenerate entry of
/// row 1 on the upper semicircle is returned.
inline Configuration realize_matrix(const DistanceMatrix& m)
{
    const std::size_t n = m.size();
    std::vector<CirclePoint> points(n);

    std::optional<std::size_t> anchor;
    for (std::size_t i = 1; i < n; ++i) {
        if (m(0, i) != 0 && m(0, i) != 1) {
            anchor = i;
            break;
        }
    }

    for (std::size_t i = 1; i < n; ++i) {
        const CirclePoint plus(m(0, i));
        if (!anchor || i == *anchor || m(0, i) == 0 || m(0, i) == 1) {
            points[i] = plus;
            continue;
        }
        const CirclePoint minus(Rational(2 - m(0, i)));
        const CirclePoint& a = points[*anchor];
        if (geodesic_distance(plus, a) == m(i, *anchor))
            points[i] = plus;
        else if (geodesic_distance(minus, a) == m(i, *anchor))
            points[i] = minus;
        else
            fail(ErrorKind::NotRealizable, "no sign choice for point " + std::to_string(i) +
                                               " matches its distance to point " + std::to_string(*anchor));
    }

    Configuration x(std::move(points));
    if (distance_matrix(x) != m)
        fail(ErrorKind::NotRealizable, "matrix is not the distance matrix of points on the circle");
    return x;
}

} // namespace curvature
