#pragma once

// Cosine images of distance matrices and their membership in the elliptope
// (PSD matrices with unit diagonal). The only floating-point module.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "curvature/circle.hpp"
#include "curvature/errors.hpp"

namespace curvature {

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-9;
inline constexpr double kRankTolerance = 1e-8;

class CorrelationMatrix {
public:
    explicit CorrelationMatrix(Eigen::MatrixXd entries) : a_(std::move(entries))
    {
        if (a_.rows() != a_.cols())
            fail(ErrorKind::DimensionMismatch, "correlation matrix must be square");
        const auto n = a_.rows();
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(a_(i, i) - 1.0) > kSymmetryTolerance)
                fail(ErrorKind::InvalidArgument, "diagonal entry " + std::to_string(i) + " is not 1");
            for (Eigen::Index j = 0; j < n; ++j) {
                if (std::abs(a_(i, j) - a_(j, i)) > kSymmetryTolerance)
                    fail(ErrorKind::NotSymmetric, "asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                if (std::abs(a_(i, j)) > 1.0 + kSymmetryTolerance)
                    fail(ErrorKind::InvalidArgument, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                         ") outside [-1,1]");
            }
        }
    }

    CorrelationMatrix(std::initializer_list<std::initializer_list<double>> rows) : CorrelationMatrix(build(rows)) {}

    std::size_t size() const noexcept { return static_cast<std::size_t>(a_.rows()); }
    double operator()(std::size_t i, std::size_t j) const
    {
        return a_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    const Eigen::MatrixXd& matrix() const noexcept { return a_; }

private:
    static Eigen::MatrixXd build(std::initializer_list<std::initializer_list<double>> rows)
    {
        const auto n = static_cast<Eigen::Index>(rows.size());
        Eigen::MatrixXd a(n, n);
        Eigen::Index i = 0;
        for (const auto& row : rows) {
            if (static_cast<Eigen::Index>(row.size()) != n)
                fail(ErrorKind::DimensionMismatch, "correlation matrix rows must have length " + std::to_string(n));
            Eigen::Index j = 0;
            for (double v : row)
                a(i, j++) = v;
            ++i;
        }
        return a;
    }

    Eigen::MatrixXd a_;
};

inline double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

/// Entrywise cos(pi d_ij), with an exact unit diagonal.
inline CorrelationMatrix cosine_transform(const DistanceMatrix& m)
{
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double c = std::cos(std::numbers::pi * to_double(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
            a(i, j) = c;
            a(j, i) = c;
        }
    }
    return CorrelationMatrix(std::move(a));
}

inline Eigen::VectorXd eigenvalues(const CorrelationMatrix& a)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

struct PsdResult {
    bool psd = false;
    double min_eigenvalue = 0.0;
};

inline PsdResult is_psd(const CorrelationMatrix& a, double tol = kPsdTolerance)
{
    const double min_eig = eigenvalues(a).minCoeff();
    return {min_eig >= -tol, min_eig};
}

/// Number of eigenvalues above `tol`. Throws NotPSD when some eigenvalue is
/// below -psd_tol.
inline int gram_rank(const CorrelationMatrix& a, double tol = kRankTolerance, double psd_tol = kPsdTolerance)
{
    const Eigen::VectorXd ev = eigenvalues(a);
    if (ev.minCoeff() < -psd_tol)
        fail(ErrorKind::NotPSD, "minimum eigenvalue " + std::to_string(ev.minCoeff()) + " is negative");
    return static_cast<int>((ev.array() > tol).count());
}

/// Euclidean chord lengths 2 sin(pi d / 2) of the unit circle.
inline Eigen::MatrixXd geodesic_to_chordal(const DistanceMatrix& m)
{
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out(i, j) = 2.0 * std::sin(std::numbers::pi *
                                       to_double(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) / 2.0);
    return out;
}

/// Inverse of geodesic_to_chordal: 2 arcsin(c / 2) / pi, in units of pi.
inline Eigen::MatrixXd chordal_to_geodesic(const Eigen::MatrixXd& chords)
{
    return chords.unaryExpr([](double c) { return 2.0 * std::asin(std::clamp(c / 2.0, -1.0, 1.0)) / std::numbers::pi; });
}

struct ElliptopeReport {
    bool psd = false;
    double min_eigenvalue = 0.0;
    int rank = 0;
};

/// PSD status and numerical rank of cos(M). For M realizable on S^1 the rank
/// is at most 2.
inline ElliptopeReport elliptope_membership(const DistanceMatrix& m, double psd_tol = kPsdTolerance,
                                            double rank_tol = kRankTolerance)
{
    const CorrelationMatrix a = cosine_transform(m);
    const Eigen::VectorXd ev = eigenvalues(a);
    ElliptopeReport r;
    r.min_eigenvalue = ev.minCoeff();
    r.psd = r.min_eigenvalue >= -psd_tol;
    r.rank = static_cast<int>((ev.array() > rank_tol).count());
    return r;
}

} // namespace curvature
