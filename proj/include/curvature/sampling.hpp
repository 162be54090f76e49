#pragma once

// Seeded random generation of exact test data. Only raw 64-bit draws from
// mt19937_64 are used (reduced by modulo), so a seed reproduces the same
// stream on every platform.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "curvature/circle.hpp"
#include "curvature/cluster.hpp"
#include "curvature/rational.hpp"

namespace curvature {

inline constexpr std::uint64_t kDefaultMaxDenominator = 1000;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed, std::uint64_t max_denominator = kDefaultMaxDenominator)
        : engine_(seed), max_den_(max_denominator)
    {
    }

    /// Uniform-ish integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    /// Integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (engine_() & 1U) != 0; }

    /// Angle p/q in [0, 2) with q <= the configured bound.
    Rational angle()
    {
        const auto den = static_cast<std::int64_t>(1 + below(max_den_));
        const auto num = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(2 * den)));
        return Rational(num, den);
    }

    Configuration configuration(std::size_t n)
    {
        std::vector<CirclePoint> points;
        points.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            points.emplace_back(angle());
        return Configuration(std::move(points));
    }

    /// Configuration rotated so that the first point is at 0.
    Configuration normalized_configuration(std::size_t n) { return normalize(configuration(n)); }

    Isometry isometry() { return Isometry(angle(), coin()); }

    /// Random (m, n)-cluster structure. Labels 2..m go to distinct random
    /// positions, the rest are free; this is not uniform over structures.
    ClusterStructure structure(int n, int m)
    {
        std::vector<int> positions(static_cast<std::size_t>(n - 1));
        std::iota(positions.begin(), positions.end(), 1);
        shuffle(positions);
        std::vector<int> labels(static_cast<std::size_t>(n), 0);
        labels[0] = 1;
        for (int k = 2; k <= m; ++k)
            labels[static_cast<std::size_t>(positions[static_cast<std::size_t>(k - 2)])] = k;
        std::vector<int> values(static_cast<std::size_t>(n));
        values[0] = 1;
        for (std::size_t i = 1; i < labels.size(); ++i) {
            const int label = labels[i] != 0 ? labels[i] : static_cast<int>(between(1, m));
            values[i] = coin() ? label : -label;
        }
        return ClusterStructure(std::move(values), m);
    }

    ClusterStructure structure(int n) { return structure(n, static_cast<int>(between(1, n))); }

    /// Point of the open simplex: every coordinate positive.
    BarycentricPoint interior_point(int m)
    {
        std::vector<std::int64_t> weights(static_cast<std::size_t>(m));
        for (auto& w : weights)
            w = between(1, static_cast<std::int64_t>(max_den_));
        return from_weights(weights);
    }

    /// Point with at least one zero coordinate (needs m >= 2), and at least
    /// one positive coordinate.
    BarycentricPoint boundary_point(int m)
    {
        std::vector<std::int64_t> weights(static_cast<std::size_t>(m), 0);
        // Nonempty proper support, encoded as a bitmask in [1, 2^m - 2].
        const std::uint64_t mask = 1 + below((std::uint64_t{1} << m) - 2);
        for (int k = 0; k < m; ++k)
            if (((mask >> k) & 1U) != 0)
                weights[static_cast<std::size_t>(k)] = between(1, static_cast<std::int64_t>(max_den_));
        return from_weights(weights);
    }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    static BarycentricPoint from_weights(const std::vector<std::int64_t>& weights)
    {
        const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
        std::vector<Rational> coords;
        coords.reserve(weights.size());
        for (auto w : weights)
            coords.emplace_back(w, total);
        return BarycentricPoint(std::move(coords));
    }

    std::mt19937_64 engine_;
    std::uint64_t max_den_;
};

} // namespace curvature
