#pragma once

// Seeded property suite over random exact samples. Each property reports
// pass/fail counts and the first counterexample.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "curvature/circle.hpp"
#include "curvature/cluster.hpp"
#include "curvature/elliptope.hpp"
#include "curvature/io.hpp"
#include "curvature/sampling.hpp"

namespace curvature {

struct PropertyResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::optional<std::string> counterexample;

    void record(bool ok, const std::function<std::string()>& witness)
    {
        if (ok) {
            ++passed;
            return;
        }
        ++failed;
        if (!counterexample)
            counterexample = witness();
    }
};

struct PropertyOptions {
    std::uint64_t samples = 100;
    std::uint64_t seed = 1;
    /// Random isometries tried per sample for the invariance property.
    int isometries_per_sample = 100;
    /// Replaceable so a deliberately broken transpose can be smoke-tested.
    std::function<ClusterStructure(const ClusterStructure&)> transpose = [](const ClusterStructure& c) {
        return curvature::transpose(c);
    };
};

inline const std::vector<std::string>& property_names()
{
    static const std::vector<std::string> names{
        "convex",          "round_trip",     "boundary_collapse", "equivariance", "isometry_invariance",
        "recover_isometry", "realize_matrix", "predicted_distance", "transpose_induced", "elliptope",
        "injectivity",
    };
    return names;
}

namespace detail {

inline std::string witness(int n, const ClusterStructure& c, const BarycentricPoint& t)
{
    return "n=" + std::to_string(n) + " c=" + to_json(c).dump() + " t=" + to_json(t).dump();
}

inline std::string witness(int n, const Configuration& x)
{
    return "n=" + std::to_string(n) + " x=[" + format_configuration(x) + "]";
}

/// Evaluates a check, treating a library error as failure.
template <class F>
bool holds(F&& check)
{
    try {
        return check();
    } catch (const Error&) {
        return false;
    }
}

/// Seed for one n, so adding sizes never perturbs the others.
inline std::uint64_t seed_for(std::uint64_t seed, int n)
{
    return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n);
}

} // namespace detail

/// Runs every property on `samples` draws for each n in [n_lo, n_hi].
/// Results are returned in property_names() order, aggregated over n.
inline std::vector<PropertyResult> run_identity_suite(int n_lo, int n_hi, const PropertyOptions& options = {})
{
    if (n_lo < 1 || n_hi < n_lo)
        fail(ErrorKind::InvalidRange, "need 1 <= n_lo <= n_hi");

    std::vector<PropertyResult> results;
    for (const auto& name : property_names())
        results.push_back({name, 0, 0, std::nullopt});
    auto& convex = results[0];
    auto& round_trip = results[1];
    auto& boundary = results[2];
    auto& equivariance = results[3];
    auto& invariance = results[4];
    auto& recover = results[5];
    auto& realize = results[6];
    auto& predicted = results[7];
    auto& transpose_induced = results[8];
    auto& elliptope = results[9];
    auto& injectivity = results[10];

    for (int n = n_lo; n <= n_hi; ++n) {
        Sampler rng(detail::seed_for(options.seed, n));
        for (std::uint64_t s = 0; s < options.samples; ++s) {
            // Structure-side identities.
            const ClusterStructure c = rng.structure(n);
            const BarycentricPoint t = rng.interior_point(c.m());
            const Configuration x = phi(c, t);
            const DistanceMatrix d = distance_matrix(x);

            convex.record(combine(convex_decomposition(c, t)) == d, [&] { return detail::witness(n, c, t); });
            round_trip.record(induced_cluster(x) == InducedCluster{c, t}, [&] { return detail::witness(n, c, t); });

            if (c.m() >= 2) {
                const BarycentricPoint tb = rng.boundary_point(c.m());
                const auto support = tb.support();
                const InducedCluster expected{restrict_to(c, support), detail::compress(tb, support)};
                boundary.record(induced_cluster(phi(c, tb)) == expected, [&] { return detail::witness(n, c, tb); });
            }

            const bool equivariant =
                detail::holds([&] { return phi(options.transpose(c), reverse_barycentric(t)) == reflect(x); });
            equivariance.record(equivariant, [&] { return detail::witness(n, c, t); });

            bool predicted_ok = true;
            for (std::size_t i = 0; i < x.size() && predicted_ok; ++i)
                for (std::size_t j = 0; j < x.size() && predicted_ok; ++j)
                    predicted_ok = predicted_distance(c, t, i, j) == d(i, j);
            predicted.record(predicted_ok, [&] { return detail::witness(n, c, t); });

            const BarycentricPoint t2 = rng.interior_point(c.m());
            if (!(t2 == t)) {
                const Configuration x2 = phi(c, t2);
                injectivity.record(!(x2 == x) && !(distance_matrix(x2) == d),
                                   [&] { return detail::witness(n, c, t) + " vs t=" + to_json(t2).dump(); });
            }

            // Configuration-side identities.
            const Configuration y = rng.configuration(static_cast<std::size_t>(n));
            const DistanceMatrix dy = distance_matrix(y);

            bool invariant = true;
            bool recovered = true;
            for (int k = 0; k < options.isometries_per_sample; ++k) {
                const Isometry tau = rng.isometry();
                const Configuration moved = apply_isometry(tau, y);
                invariant = invariant && distance_matrix(moved) == dy;
                if (k == 0) {
                    try {
                        recovered = apply_isometry(recover_isometry(y, moved), y) == moved;
                    } catch (const Error&) {
                        recovered = false;
                    }
                }
            }
            invariance.record(invariant, [&] { return detail::witness(n, y); });
            recover.record(recovered, [&] { return detail::witness(n, y); });

            bool realized = false;
            try {
                const Configuration z = realize_matrix(dy);
                const Configuration base = normalize(y);
                realized = distance_matrix(z) == dy && (z == base || z == reflect(base));
            } catch (const Error&) {
                realized = false;
            }
            realize.record(realized, [&] { return detail::witness(n, y); });

            const Configuration yn = normalize(y);
            const InducedCluster cy = induced_cluster(yn);
            transpose_induced.record(detail::holds([&] {
                                         const InducedCluster flipped{options.transpose(cy.structure),
                                                                      reverse_barycentric(cy.t)};
                                         return induced_cluster(reflect(yn)) == flipped;
                                     }),
                                     [&] { return detail::witness(n, yn); });

            const ElliptopeReport er = elliptope_membership(dy);
            elliptope.record(er.psd && er.rank <= 2, [&] { return detail::witness(n, y); });
        }
    }
    return results;
}

inline bool all_passed(const std::vector<PropertyResult>& results)
{
    for (const auto& r : results)
        if (r.failed != 0)
            return false;
    return true;
}

} // namespace curvature
