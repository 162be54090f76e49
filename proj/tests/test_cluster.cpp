#include <catch_amalgamated.hpp>

#include <algorithm>

#include "curvature/curvature.hpp"

using namespace curvature;
using R = Rational;

namespace {

Configuration angles(std::initializer_list<R> a)
{
    return Configuration::from_angles(a);
}

Configuration signs(const std::string& s)
{
    std::vector<R> a;
    for (char ch : s)
        a.emplace_back(ch == '+' ? 0 : 1);
    return Configuration::from_angles(a);
}

template <class F>
void expect_error(ErrorKind kind, F&& f)
{
    try {
        f();
        FAIL("expected " << to_string(kind));
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
    }
}

const ClusterStructure f1({1, -2, 3}, 3);
const BarycentricPoint t_f1{R(1, 3), R(1, 4), R(5, 12)};

} // namespace

TEST_CASE("validating cluster structures")
{
    CHECK_NOTHROW(validate_cluster_structure(std::vector<int>{1, -2, 3}, 3));
    expect_error(ErrorKind::InvalidClusterStructure, [] { ClusterStructure({-1, 2}, 2); });
    expect_error(ErrorKind::InvalidClusterStructure, [] { ClusterStructure({1, 1, 1}, 2); });
    expect_error(ErrorKind::InvalidClusterStructure, [] { ClusterStructure({1, 0, 1}, 1); });
    expect_error(ErrorKind::InvalidClusterStructure, [] { ClusterStructure({1, 3}, 2); });
    expect_error(ErrorKind::InvalidClusterStructure, [] { ClusterStructure({1, 2}, 3); });
    CHECK(ClusterStructure({1, -2, 3}).m() == 3);
}

TEST_CASE("barycentric points")
{
    expect_error(ErrorKind::InvalidArgument, [] { BarycentricPoint{R(1, 2), R(1, 3)}; });
    expect_error(ErrorKind::InvalidArgument, [] { BarycentricPoint{R(3, 2), R(-1, 2)}; });
    CHECK(BarycentricPoint::corner(3, 2) == BarycentricPoint{0, 1, 0});
    CHECK(BarycentricPoint{R(1, 2), 0, R(1, 2)}.support() == std::vector<int>{1, 3});
}

TEST_CASE("prefix sums")
{
    CHECK(prefix_sum(t_f1, 1) == 0);
    CHECK(prefix_sum(t_f1, 3) == R(7, 12));
    CHECK(prefix_sum(t_f1, 4) == 1);
    expect_error(ErrorKind::IndexOutOfRange, [] { prefix_sum(t_f1, 5); });
    expect_error(ErrorKind::IndexOutOfRange, [] { prefix_sum(t_f1, 0); });
}

TEST_CASE("phi")
{
    CHECK(phi(f1, t_f1) == angles({0, R(4, 3), R(7, 12)}));
    CHECK(phi(ClusterStructure({1, -1, -1}), BarycentricPoint{1}) == angles({0, 1, 1}));
    CHECK(phi(ClusterStructure({1, 1, 1}), BarycentricPoint{1}) == angles({0, 0, 0}));
    expect_error(ErrorKind::DimensionMismatch, [] { phi(f1, BarycentricPoint{R(1, 2), R(1, 2)}); });
}

TEST_CASE("induced cluster structures")
{
    const InducedCluster a = induced_cluster(angles({0, R(4, 3), R(7, 12)}));
    CHECK(a.structure == f1);
    CHECK(a.t == t_f1);

    const InducedCluster b = induced_cluster(angles({0, 1, 1}));
    CHECK(b.structure == ClusterStructure({1, -1, -1}));
    CHECK(b.t == BarycentricPoint{1});

    const InducedCluster c = induced_cluster(angles({0, R(1, 2), R(3, 2)}));
    CHECK(c.structure == ClusterStructure({1, 2, -2}));
    CHECK(c.t == BarycentricPoint{R(1, 2), R(1, 2)});

    expect_error(ErrorKind::NotNormalized, [] { induced_cluster(angles({R(1, 2), 0})); });
}

TEST_CASE("vertices")
{
    CHECK(vertex(f1, 1) == signs("++-"));
    CHECK(vertex(f1, 2) == signs("+--"));
    CHECK(vertex(f1, 3) == signs("+-+"));
    CHECK(vertex_set(ClusterStructure({1, 2, 2})) == std::vector<Configuration>{signs("+--"), signs("+++")});
    CHECK(vertex_set(ClusterStructure({1, -1, -1})) == std::vector<Configuration>{signs("+--")});
    expect_error(ErrorKind::IndexOutOfRange, [] { vertex(f1, 4); });

    Sampler rng(21);
    for (int i = 0; i < 200; ++i) {
        const ClusterStructure c = rng.structure(6);
        const auto vs = vertex_set(c);
        for (int k = 1; k <= c.m(); ++k)
            CHECK(vs[static_cast<std::size_t>(k - 1)] == phi(c, BarycentricPoint::corner(c.m(), k)));
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                CHECK_FALSE(vs[a] == vs[b]);
    }
}

TEST_CASE("restriction")
{
    CHECK(restrict_to(f1, {1, 3}) == ClusterStructure({1, -2, 2}));
    CHECK(restrict_to(f1, {1, 2, 3}) == f1);
    CHECK(restrict_to(f1, {2}) == ClusterStructure({1, -1, -1}));
    CHECK(vertex_set(restrict_to(f1, {1, 3})) == std::vector<Configuration>{signs("++-"), signs("+-+")});
    expect_error(ErrorKind::EmptyIndexSet, [] { restrict_to(f1, std::vector<int>{}); });
    expect_error(ErrorKind::IndexOutOfRange, [] { restrict_to(f1, {3, 1}); });
    expect_error(ErrorKind::IndexOutOfRange, [] { restrict_to(f1, {4}); });
}

TEST_CASE("restriction keeps exactly the selected vertices")
{
    Sampler rng(22);
    for (int i = 0; i < 300; ++i) {
        const ClusterStructure c = rng.structure(7);
        std::vector<int> subset;
        while (subset.empty())
            for (int k = 1; k <= c.m(); ++k)
                if (rng.coin())
                    subset.push_back(k);
        std::vector<Configuration> expected;
        for (int k : subset)
            expected.push_back(vertex(c, k));
        CHECK(vertex_set(restrict_to(c, subset)) == expected);
    }
}

TEST_CASE("transpose")
{
    CHECK(transpose(f1) == ClusterStructure({1, 3, -2}));
    CHECK(transpose(ClusterStructure({1, 2, 3})) == ClusterStructure({1, -3, -2}));
    CHECK(transpose(ClusterStructure({1, -1, -1})) == ClusterStructure({1, -1, -1}));

    Sampler rng(23);
    for (int i = 0; i < 300; ++i) {
        const ClusterStructure c = rng.structure(7);
        CHECK(transpose(transpose(c)) == c);
        auto reversed = vertex_set(c);
        std::reverse(reversed.begin(), reversed.end());
        CHECK(vertex_set(transpose(c)) == reversed);
        if (c.m() >= 2)
            CHECK_FALSE(transpose(c) == c);
    }
}

TEST_CASE("reverse_barycentric")
{
    CHECK(reverse_barycentric(t_f1) == BarycentricPoint{R(5, 12), R(1, 4), R(1, 3)});
    CHECK(reverse_barycentric(BarycentricPoint{1}) == BarycentricPoint{1});
    CHECK(reverse_barycentric(reverse_barycentric(t_f1)) == t_f1);
}

TEST_CASE("predicted distances")
{
    CHECK(predicted_distance(f1, t_f1, 0, 2) == R(7, 12));
    CHECK(predicted_distance(f1, t_f1, 0, 1) == R(2, 3));
    CHECK(predicted_distance(f1, t_f1, 1, 1) == 0);
    expect_error(ErrorKind::IndexOutOfRange, [] { predicted_distance(f1, t_f1, 0, 3); });
}

TEST_CASE("convex decomposition")
{
    const DistanceMatrix expected{{0, R(2, 3), R(7, 12)}, {R(2, 3), 0, R(3, 4)}, {R(7, 12), R(3, 4), 0}};
    CHECK(combine(convex_decomposition(f1, t_f1)) == expected);

    const ClusterStructure single({1, -1, 1});
    const auto one = convex_decomposition(single, BarycentricPoint{1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == 1);
    CHECK(one[0].second == distance_matrix(signs("+-+")));
}

TEST_CASE("convex decomposition of a K3 point with x3 past the antipode of x1")
{
    // x = (1, e^{i t2}, e^{i t3}) with t2 = pi/3 and t3 = 7pi/6 in [pi, t2 + pi]:
    // D(x) = l1/pi M1 + l2/pi M2 + l3/pi M3 with l1 = t2 - t3 + pi,
    // l2 = t3 - pi, l3 = pi - t2 and M1 = D(+--), M2 = D(+-+), M3 = D(++-).
    const R t2(1, 3);
    const R t3(7, 6);
    const Configuration x = angles({0, t2, t3});
    const R l1 = t2 - t3 + 1;
    const R l2 = t3 - 1;
    const R l3 = 1 - t2;
    const DistanceMatrix m1 = distance_matrix(signs("+--"));
    const DistanceMatrix m2 = distance_matrix(signs("+-+"));
    const DistanceMatrix m3 = distance_matrix(signs("++-"));
    CHECK(combine({{l1, m1}, {l2, m2}, {l3, m3}}) == distance_matrix(x));

    const InducedCluster ic = induced_cluster(x);
    auto terms = convex_decomposition(ic.structure, ic.t);
    REQUIRE(terms.size() == 3);
    auto weight_of = [&](const DistanceMatrix& m) {
        for (const auto& [w, d] : terms)
            if (d == m)
                return w;
        return R(-1);
    };
    CHECK(weight_of(m1) == l1);
    CHECK(weight_of(m2) == l2);
    CHECK(weight_of(m3) == l3);
}

TEST_CASE("structure identities on random samples")
{
    Sampler rng(24);
    for (int i = 0; i < 500; ++i) {
        const int n = static_cast<int>(rng.between(1, 7));
        const ClusterStructure c = rng.structure(n);
        const BarycentricPoint t = rng.interior_point(c.m());
        const Configuration x = phi(c, t);
        const DistanceMatrix d = distance_matrix(x);

        CHECK(combine(convex_decomposition(c, t)) == d);
        CHECK(induced_cluster(x) == InducedCluster{c, t});
        CHECK(phi(transpose(c), reverse_barycentric(t)) == reflect(x));
        CHECK(induced_cluster(reflect(x)).structure == transpose(c));
        for (std::size_t a = 0; a < x.size(); ++a)
            for (std::size_t b = 0; b < x.size(); ++b)
                CHECK(predicted_distance(c, t, a, b) == d(a, b));

        if (c.m() >= 2) {
            const BarycentricPoint tb = rng.boundary_point(c.m());
            const auto support = tb.support();
            const ClusterStructure ci = restrict_to(c, support);
            const BarycentricPoint s = detail::compress(tb, support);
            CHECK(induced_cluster(phi(c, tb)) == InducedCluster{ci, s});
            CHECK(phi(ci, s) == phi(c, tb));
        }

        const BarycentricPoint t2 = rng.interior_point(c.m());
        if (!(t2 == t)) {
            CHECK_FALSE(phi(c, t2) == x);
            CHECK_FALSE(distance_matrix(phi(c, t2)) == d);
        }
    }
}

TEST_CASE("identity suite passes and catches a broken transpose")
{
    PropertyOptions options;
    options.samples = 60;
    options.seed = 5;
    options.isometries_per_sample = 10;
    const auto results = run_identity_suite(1, 6, options);
    for (const auto& r : results) {
        INFO(r.name << " " << r.counterexample.value_or(""));
        CHECK(r.failed == 0);
        CHECK(r.passed > 0);
    }

    options.transpose = [](const ClusterStructure& c) {
        std::vector<int> values(c.n());
        for (std::size_t i = 0; i < c.n(); ++i)
            values[i] = c.label(i) == 1 ? c[i] : c.sign(i) * (c.m() + 2 - c.label(i));
        return ClusterStructure(std::move(values), c.m());
    };
    const auto broken = run_identity_suite(3, 4, options);
    const auto& eq = *std::find_if(broken.begin(), broken.end(), [](const auto& r) { return r.name == "equivariance"; });
    CHECK(eq.failed > 0);
    REQUIRE(eq.counterexample.has_value());
    CHECK(eq.counterexample->find("c=[") != std::string::npos);
    CHECK(eq.counterexample->find("t=[") != std::string::npos);
}
