#pragma once

// Text and JSON formats.
//
// Distance matrices: a line with n, then n lines of n rationals (p/q or
// integers) in units of pi. Configurations: one line of rationals in [0, 2).

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "curvature/circle.hpp"
#include "curvature/cluster.hpp"
#include "curvature/elliptope.hpp"
#include "curvature/errors.hpp"
#include "curvature/homology.hpp"
#include "curvature/rational.hpp"
#include "curvature/state_complex.hpp"

namespace curvature {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> tokens(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

} // namespace detail

inline DistanceMatrix parse_distance_matrix(std::string_view text)
{
    const auto toks = detail::tokens(text);
    if (toks.empty())
        fail(ErrorKind::ParseError, "empty distance matrix input");
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(toks[0], &used);
        if (used != toks[0].size() || v < 1)
            throw std::invalid_argument("bad size");
        n = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "first token must be a positive size, got '" + toks[0] + "'");
    }
    if (toks.size() != 1 + n * n)
        fail(ErrorKind::ParseError, "expected " + std::to_string(n * n) + " entries after the size, got " +
                                        std::to_string(toks.size() - 1));
    std::vector<Rational> entries;
    entries.reserve(n * n);
    for (std::size_t i = 1; i < toks.size(); ++i)
        entries.push_back(parse_rational(toks[i]));
    return DistanceMatrix(n, std::move(entries));
}

inline std::string format_distance_matrix(const DistanceMatrix& m)
{
    std::string out = std::to_string(m.size()) + "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j > 0)
                out += " ";
            out += format_rational(m(i, j));
        }
        out += "\n";
    }
    return out;
}

inline Configuration parse_configuration(std::string_view line)
{
    std::vector<Rational> angles;
    for (const auto& t : detail::tokens(line)) {
        Rational a = parse_rational(t);
        if (a < 0 || a >= 2)
            fail(ErrorKind::ParseError, "angle " + t + " outside [0,2)");
        angles.push_back(a);
    }
    if (angles.empty())
        fail(ErrorKind::ParseError, "empty configuration");
    return Configuration::from_angles(angles);
}

inline std::string format_configuration(const Configuration& x)
{
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0)
            out += " ";
        out += format_rational(x[i].angle());
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const ClusterStructure& c)
{
    return Json(c.values());
}

inline Json to_json(const BarycentricPoint& t)
{
    Json out = Json::array();
    for (const auto& v : t.coords())
        out.push_back(format_rational(v));
    return out;
}

inline Json to_json(const SignVertex& v)
{
    return Json(v.signs());
}

inline Json to_json(const HomologyGroup& h)
{
    Json other = Json::array();
    for (const auto& q : h.other_torsion)
        other.push_back(q.str());
    return Json{{"betti", h.betti}, {"torsion2", h.torsion2}, {"other_torsion", other}, {"group", h.to_string()}};
}

inline Json to_json(const ElliptopeReport& r)
{
    return Json{{"psd", r.psd}, {"min_eig", r.min_eigenvalue}, {"rank", r.rank}};
}

inline Json to_json(const MinimalSimplex& s)
{
    Json vertices = Json::array();
    for (auto v : s.vertices)
        vertices.push_back(v);
    Json corners = Json::array();
    for (auto v : s.corners)
        corners.push_back(SignVertex{v, static_cast<int>(s.realization.size())}.to_string());
    return Json{{"dimension", static_cast<int>(s.vertices.size()) - 1},
                {"vertices", vertices},
                {"corners", corners},
                {"structure", to_json(s.structure)},
                {"label", to_json(s.label)},
                {"t", to_json(s.t)},
                {"configuration", format_configuration(s.realization)}};
}

/// {"n", "vertices", "f_vector", "simplices", "labels"}; labels only when given.
inline Json complex_to_json(const SimplicialComplex& k,
                            const std::vector<std::vector<ClusterStructure>>* labels = nullptr)
{
    Json vertices = Json::array();
    for (const auto& v : k.vertices())
        vertices.push_back(to_json(v));
    Json f = Json::array();
    for (auto count : k.f_vector())
        f.push_back(count);
    Json simplices = Json::object();
    for (int d = 0; d <= k.dimension(); ++d) {
        Json level = Json::array();
        for (const auto& s : k.sets(d))
            level.push_back(s.to_vector());
        simplices[std::to_string(d)] = std::move(level);
    }
    Json out{{"n", k.n()}, {"vertices", vertices}, {"f_vector", f}, {"simplices", simplices}};
    if (labels != nullptr) {
        Json by_dim = Json::object();
        for (std::size_t d = 0; d < labels->size(); ++d) {
            Json level = Json::array();
            for (const auto& c : (*labels)[d])
                level.push_back(to_json(c));
            by_dim[std::to_string(d)] = std::move(level);
        }
        out["labels"] = std::move(by_dim);
    }
    return out;
}

inline SimplicialComplex complex_from_json(const Json& j)
{
    try {
        const int n = j.at("n").get<int>();
        std::vector<SignVertex> vertices;
        for (const auto& v : j.at("vertices")) {
            std::vector<Rational> angles;
            for (const auto& s : v) {
                const int sign = s.get<int>();
                if (sign != 1 && sign != -1)
                    fail(ErrorKind::ParseError, "vertex coordinates must be +1 or -1");
                angles.emplace_back(sign > 0 ? 0 : 1);
            }
            if (static_cast<int>(angles.size()) != n)
                fail(ErrorKind::ParseError, "vertex of length " + std::to_string(angles.size()) + " for n=" +
                                                std::to_string(n));
            vertices.push_back(SignVertex::from_configuration(Configuration::from_angles(angles)));
        }
        std::vector<std::vector<SimplicialComplex::Simplex>> simplices;
        const auto& by_dim = j.at("simplices");
        for (std::size_t d = 0; by_dim.contains(std::to_string(d)); ++d)
            simplices.push_back(by_dim.at(std::to_string(d)).get<std::vector<SimplicialComplex::Simplex>>());
        if (simplices.size() != by_dim.size())
            fail(ErrorKind::ParseError, "simplex dimensions must be consecutive from 0");
        return SimplicialComplex(n, std::move(vertices), simplices);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("malformed complex JSON: ") + e.what());
    }
}

inline Json to_json(const HomologyReport& r)
{
    Json degrees = Json::array();
    for (const auto& d : r.degrees) {
        Json checks = Json::object();
        for (const auto& [name, ok] : d.checks)
            checks[name] = ok;
        Json mod = Json::object();
        for (const auto& [p, b] : d.betti_mod)
            mod[std::to_string(p)] = b;
        Json entry{{"degree", d.degree},
                   {"betti", d.betti_q},
                   {"torsion2", d.torsion2},
                   {"betti_mod_p", mod},
                   {"expected", to_json(d.expected)},
                   {"checks", checks}};
        if (d.integer)
            entry["integer"] = to_json(*d.integer);
        degrees.push_back(std::move(entry));
    }
    return Json{{"n", r.n},
                {"chain_ranks", r.dims},
                {"square_zero", r.square_zero},
                {"snf", r.snf_ran},
                {"degrees", degrees},
                {"passed", r.passed()}};
}

} // namespace curvature
