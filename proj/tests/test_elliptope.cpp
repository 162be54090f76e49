#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "curvature/curvature.hpp"

using namespace curvature;
using R = Rational;

namespace {

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

} // namespace

TEST_CASE("correlation matrix validation")
{
    CHECK(CorrelationMatrix{{1, 0.5}, {0.5, 1}}.size() == 2);
    expect_error(ErrorKind::NotSymmetric, [] { CorrelationMatrix{{1, 0.5}, {0.4, 1}}; });
    expect_error(ErrorKind::InvalidArgument, [] { CorrelationMatrix{{2, 0}, {0, 1}}; });
    expect_error(ErrorKind::InvalidArgument, [] { CorrelationMatrix{{1, 1.5}, {1.5, 1}}; });
    expect_error(ErrorKind::DimensionMismatch, [] { CorrelationMatrix{{1, 0}, {0}}; });
}

TEST_CASE("cosine transform examples")
{
    const CorrelationMatrix a = cosine_transform(distance_matrix(Configuration::from_angles({0, 1, 1})));
    CHECK(a(0, 1) == Catch::Approx(-1.0));
    CHECK(a(1, 2) == Catch::Approx(1.0));
    CHECK(gram_rank(a) == 1);

    const CorrelationMatrix b = cosine_transform(distance_matrix(Configuration::from_angles({0, R(1, 2), R(1, 4)})));
    CHECK(std::abs(b(0, 1)) < 1e-12);
    CHECK(gram_rank(b) == 2);
}

TEST_CASE("cosine of a realizable matrix is the Gram matrix of the points")
{
    Sampler rng(51);
    for (int i = 0; i < 200; ++i) {
        const Configuration x = rng.configuration(static_cast<std::size_t>(rng.between(2, 9)));
        const CorrelationMatrix a = cosine_transform(distance_matrix(x));
        for (std::size_t p = 0; p < x.size(); ++p)
            for (std::size_t q = 0; q < x.size(); ++q) {
                const double ap = std::numbers::pi * x[p].angle().convert_to<double>();
                const double aq = std::numbers::pi * x[q].angle().convert_to<double>();
                const double dot = std::cos(ap) * std::cos(aq) + std::sin(ap) * std::sin(aq);
                CHECK(std::abs(a(p, q) - dot) < 1e-12);
            }
        const ElliptopeReport r = elliptope_membership(distance_matrix(x));
        CHECK(r.psd);
        CHECK(r.rank <= 2);
        CHECK(r.rank >= 1);
    }
}

TEST_CASE("chordal and geodesic distances convert both ways")
{
    Sampler rng(52);
    for (int i = 0; i < 100; ++i) {
        const DistanceMatrix m = distance_matrix(rng.configuration(5));
        const Eigen::MatrixXd chords = geodesic_to_chordal(m);
        const Eigen::MatrixXd back = chordal_to_geodesic(chords);
        for (std::size_t p = 0; p < 5; ++p)
            for (std::size_t q = 0; q < 5; ++q) {
                const double c = chords(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
                CHECK(c >= 0.0);
                CHECK(c <= 2.0 + 1e-12);
                CHECK(std::abs(back(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) - to_double(m(p, q))) <
                      1e-12);
            }
    }
    const Eigen::MatrixXd antipodal = geodesic_to_chordal(DistanceMatrix{{0, 1}, {1, 0}});
    CHECK(antipodal(0, 1) == Catch::Approx(2.0));
    const Eigen::MatrixXd quarter = geodesic_to_chordal(DistanceMatrix{{0, R(1, 2)}, {R(1, 2), 0}});
    CHECK(quarter(0, 1) == Catch::Approx(std::sqrt(2.0)));
}

TEST_CASE("non-members of the elliptope")
{
    const CorrelationMatrix a{{1, -0.9, -0.9}, {-0.9, 1, -0.9}, {-0.9, -0.9, 1}};
    const PsdResult r = is_psd(a);
    CHECK_FALSE(r.psd);
    CHECK(r.min_eigenvalue == Catch::Approx(-0.8));
    expect_error(ErrorKind::NotPSD, [&] { gram_rank(a); });

    const ElliptopeReport all_pi = elliptope_membership(DistanceMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK_FALSE(all_pi.psd);
    CHECK(all_pi.min_eigenvalue == Catch::Approx(-1.0));
}

TEST_CASE("ranks")
{
    const ElliptopeReport zero = elliptope_membership(DistanceMatrix::zero(4));
    CHECK(zero.psd);
    CHECK(zero.rank == 1);

    const CorrelationMatrix identity{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(gram_rank(identity) == 3);

    const ElliptopeReport e1 = elliptope_membership(DistanceMatrix{{0, R(1, 2), 1}, {R(1, 2), 0, R(1, 2)}, {1, R(1, 2), 0}});
    CHECK(e1.psd);
    CHECK(e1.rank == 2);
}
