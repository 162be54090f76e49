#pragma once

// The complete table of cluster structures for n = 3, row by row.
// Distances are sums of barycentric coordinates; kPi stands for the constant
// distance pi (1 in our units) and an empty sum for 0.

#include <array>
#include <string>
#include <vector>

#include "curvature/curvature.hpp"

namespace n3_tables {

inline constexpr int kPi = 0;

/// Terms of one symbolic distance: k in 1..3 means t_k, kPi means pi.
using Sum = std::vector<int>;

struct Row {
    std::string name;
    std::vector<int> c;
    /// V(c) in corner order, e.g. "+--".
    std::vector<std::string> vertices;
    /// d12, d13, d23.
    std::array<Sum, 3> distances;
};

inline const std::vector<Row>& vertex_rows()
{
    static const std::vector<Row> rows{
        {"v1", {1, -1, -1}, {"+--"}, {Sum{kPi}, Sum{kPi}, Sum{}}},
        {"v2", {1, 1, -1}, {"++-"}, {Sum{}, Sum{kPi}, Sum{kPi}}},
        {"v3", {1, -1, 1}, {"+-+"}, {Sum{kPi}, Sum{}, Sum{kPi}}},
        {"v4", {1, 1, 1}, {"+++"}, {Sum{}, Sum{}, Sum{}}},
    };
    return rows;
}

inline const std::vector<Row>& edge_rows()
{
    static const std::vector<Row> rows{
        {"e1", {1, 2, -1}, {"+--", "++-"}, {Sum{1}, Sum{kPi}, Sum{2}}},
        {"e2", {1, -2, -1}, {"++-", "+--"}, {Sum{2}, Sum{kPi}, Sum{1}}},
        {"e3", {1, -1, 2}, {"+--", "+-+"}, {Sum{kPi}, Sum{1}, Sum{2}}},
        {"e4", {1, -1, -2}, {"+-+", "+--"}, {Sum{kPi}, Sum{2}, Sum{1}}},
        {"e5", {1, -2, 2}, {"++-", "+-+"}, {Sum{2}, Sum{1}, Sum{kPi}}},
        {"e6", {1, 2, -2}, {"+-+", "++-"}, {Sum{1}, Sum{2}, Sum{kPi}}},
        {"e7", {1, 2, 2}, {"+--", "+++"}, {Sum{1}, Sum{1}, Sum{}}},
        {"e8", {1, -2, -2}, {"+++", "+--"}, {Sum{2}, Sum{2}, Sum{}}},
        {"e9", {1, 1, 2}, {"++-", "+++"}, {Sum{}, Sum{1}, Sum{1}}},
        {"e10", {1, 1, -2}, {"+++", "++-"}, {Sum{}, Sum{2}, Sum{2}}},
        {"e11", {1, 2, 1}, {"+-+", "+++"}, {Sum{1}, Sum{}, Sum{1}}},
        {"e12", {1, -2, 1}, {"+++", "+-+"}, {Sum{2}, Sum{}, Sum{2}}},
    };
    return rows;
}

inline const std::vector<Row>& triangle_rows()
{
    static const std::vector<Row> rows{
        {"f1", {1, -2, 3}, {"++-", "+--", "+-+"}, {Sum{2, 3}, Sum{1, 2}, Sum{1, 3}}},
        {"f2", {1, 3, -2}, {"+-+", "+--", "++-"}, {Sum{1, 2}, Sum{2, 3}, Sum{1, 3}}},
        {"f3", {1, 2, 3}, {"+--", "++-", "+++"}, {Sum{1}, Sum{1, 2}, Sum{2}}},
        {"f4", {1, -3, -2}, {"+++", "++-", "+--"}, {Sum{3}, Sum{2, 3}, Sum{2}}},
        {"f5", {1, 3, 2}, {"+--", "+-+", "+++"}, {Sum{1, 2}, Sum{1}, Sum{2}}},
        {"f6", {1, -2, -3}, {"+++", "+-+", "+--"}, {Sum{2, 3}, Sum{3}, Sum{2}}},
        {"f7", {1, -3, 2}, {"++-", "+++", "+-+"}, {Sum{3}, Sum{1}, Sum{1, 3}}},
        {"f8", {1, 2, -3}, {"+-+", "+++", "++-"}, {Sum{1}, Sum{3}, Sum{1, 3}}},
    };
    return rows;
}

/// Hasse diagram: each merged triangle with its three merged edges, and each
/// merged edge with its two vertices (names of the odd-numbered rows).
inline const std::vector<std::pair<std::string, std::vector<std::string>>>& hasse()
{
    static const std::vector<std::pair<std::string, std::vector<std::string>>> h{
        {"f1", {"e1", "e3", "e5"}}, {"f3", {"e1", "e7", "e9"}}, {"f5", {"e3", "e7", "e11"}},
        {"f7", {"e5", "e9", "e11"}}, {"e1", {"v1", "v2"}},      {"e3", {"v1", "v3"}},
        {"e5", {"v2", "v3"}},       {"e7", {"v1", "v4"}},       {"e9", {"v2", "v4"}},
        {"e11", {"v3", "v4"}},
    };
    return h;
}

inline curvature::Rational evaluate(const Sum& s, const curvature::BarycentricPoint& t)
{
    curvature::Rational total = 0;
    for (int k : s)
        total += k == kPi ? curvature::Rational(1) : t[static_cast<std::size_t>(k - 1)];
    return total;
}

inline std::string signs(const curvature::Configuration& v)
{
    std::string out;
    for (const auto& p : v)
        out.push_back(p.angle() == 0 ? '+' : '-');
    return out;
}

/// Interior sample points of the (m-1)-simplex used to check the patterns.
inline std::vector<curvature::BarycentricPoint> sample_points(int m)
{
    using curvature::Rational;
    if (m == 1)
        return {curvature::BarycentricPoint{Rational(1)}};
    if (m == 2)
        return {{Rational(1, 3), Rational(2, 3)}, {Rational(1, 2), Rational(1, 2)}, {Rational(5, 7), Rational(2, 7)}};
    return {{Rational(1, 3), Rational(1, 4), Rational(5, 12)},
            {Rational(1, 10), Rational(3, 5), Rational(3, 10)},
            {Rational(1, 3), Rational(1, 3), Rational(1, 3)}};
}

/// Checks one row against the library. Returns an empty string on success,
/// otherwise what went wrong.
inline std::string check_row(const Row& row)
{
    using namespace curvature;
    const ClusterStructure c(row.c);
    const auto vs = vertex_set(c);
    if (vs.size() != row.vertices.size())
        return row.name + ": wrong number of vertices";
    for (std::size_t k = 0; k < vs.size(); ++k)
        if (signs(vs[k]) != row.vertices[k])
            return row.name + ": vertex " + std::to_string(k + 1) + " is " + signs(vs[k]) + ", expected " +
                   row.vertices[k];
    for (const auto& t : sample_points(c.m())) {
        const DistanceMatrix d = distance_matrix(phi(c, t));
        const Rational got[3] = {d(0, 1), d(0, 2), d(1, 2)};
        for (int e = 0; e < 3; ++e)
            if (got[e] != evaluate(row.distances[static_cast<std::size_t>(e)], t))
                return row.name + ": distance pattern differs at t=" + to_json(t).dump();
        if (combine(convex_decomposition(c, t)) != d)
            return row.name + ": convex decomposition differs at t=" + to_json(t).dump();
    }
    return {};
}

} // namespace n3_tables
