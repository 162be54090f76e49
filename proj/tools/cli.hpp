#pragma once

// The `curvature` command line. run() is separate from main so tests can
// drive it with captured streams.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curvature/curvature.hpp"

namespace curvature::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Above this n complex exports leave out the per-simplex labels.
inline constexpr int kLabelLimitN = 6;

inline int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidRange:
    case ErrorKind::InvalidClusterStructure:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::EmptyIndexSet:
    case ErrorKind::NotNormalized:
        return kExitUsage;
    default:
        return kExitDomain;
    }
}

namespace detail {

inline std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// "a..b" or a single "a".
inline std::pair<int, int> parse_range(const std::string& text)
{
    try {
        const auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return {v, v};
        }
        const std::string lo_text = text.substr(0, dots);
        const std::string hi_text = text.substr(dots + 2);
        const int lo = std::stoi(lo_text, &used);
        if (used != lo_text.size())
            throw std::invalid_argument(text);
        const int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size())
            throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        fail(ErrorKind::ParseError, "malformed range '" + text + "', expected N or A..B");
    }
}

inline std::optional<int> env_snf_cap()
{
    const char* raw = std::getenv("CURVATURE_SNF_CAP");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    try {
        return std::stoi(raw);
    } catch (const std::logic_error&) {
        fail(ErrorKind::ParseError, std::string("CURVATURE_SNF_CAP must be an integer, got '") + raw + "'");
    }
}

inline std::uint32_t coefficient_prime(const std::string& coeff)
{
    if (coeff == "gf2")
        return 2;
    if (coeff == "gf3")
        return 3;
    return 0;
}

} // namespace detail

struct EnumerateArgs {
    int n = 0;
    std::optional<int> m;
    bool complex = false;
    bool no_labels = false;
    std::string format = "json";
};

inline int cmd_enumerate(const EnumerateArgs& a, std::ostream& out)
{
    if (a.n < 1)
        fail(ErrorKind::InvalidRange, "n must be positive");

    if (a.m && !a.complex) {
        if (a.format == "csv") {
            for_each_cluster_structure(a.n, *a.m, [&](std::span<const int> values) {
                for (std::size_t i = 0; i < values.size(); ++i)
                    out << (i > 0 ? "," : "") << values[i];
                out << "\n";
            });
            return kExitOk;
        }
        Json rows = Json::array();
        for_each_cluster_structure(a.n, *a.m, [&](std::span<const int> values) {
            rows.push_back(std::vector<int>(values.begin(), values.end()));
        });
        out << Json{{"n", a.n}, {"m", *a.m}, {"count", rows.size()}, {"structures", rows}}.dump(2) << "\n";
        return kExitOk;
    }

    const bool labels = !a.no_labels && a.n <= kLabelLimitN;
    const StateComplex st = build_state_complex(a.n, labels);
    if (a.format == "csv") {
        for (int d = 0; d <= st.complex.dimension(); ++d) {
            for (std::size_t i = 0; i < st.complex.size(d); ++i) {
                out << d;
                for (auto v : st.complex.simplex(d, i))
                    out << "," << v;
                out << "\n";
            }
        }
        return kExitOk;
    }
    Json doc = complex_to_json(st.complex, labels ? &st.labels : nullptr);
    doc["euler_characteristic"] = euler_characteristic(st.complex).str();
    out << doc.dump(2) << "\n";
    return kExitOk;
}

struct HomologyArgs {
    std::optional<int> n;
    std::string coeff = "q";
    std::optional<int> max_snf;
    std::string input;
    std::string export_dir;
};

inline void export_boundaries(const ChainComplex& c, const std::string& dir)
{
    for (std::size_t d = 1; d <= c.boundaries.size(); ++d) {
        const std::string path = dir + "/boundary_" + std::to_string(d) + ".txt";
        std::ofstream f(path);
        if (!f)
            fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
        f << c.boundaries[d - 1].to_triples();
    }
}

inline int cmd_homology(const HomologyArgs& a, std::ostream& out)
{
    int cap = 5;
    if (auto env = detail::env_snf_cap())
        cap = *env;
    if (a.max_snf)
        cap = *a.max_snf;

    if (!a.input.empty()) {
        const SimplicialComplex k = complex_from_json(Json::parse(detail::read_input(a.input)));
        const ChainComplex c = boundary_matrices(k);
        if (!a.export_dir.empty())
            export_boundaries(c, a.export_dir);
        Json doc{{"n", k.n()}, {"chain_ranks", c.dims}, {"square_zero", c.square_zero()}, {"coeff", a.coeff}};
        if (a.coeff == "z") {
            doc["groups"] = Json::array();
            for (const auto& h : integer_homology(c, std::numeric_limits<std::size_t>::max()))
                doc["groups"].push_back(h.to_string());
        } else {
            doc["betti"] = betti_over_field(c, detail::coefficient_prime(a.coeff));
        }
        out << doc.dump(2) << "\n";
        return kExitOk;
    }

    if (!a.n)
        fail(ErrorKind::InvalidArgument, "homology needs --n or --input");
    if (a.coeff == "z" && *a.n > cap)
        fail(ErrorKind::SizeLimitExceeded, "integer homology of St_" + std::to_string(*a.n) +
                                               " exceeds the Smith normal form cap n <= " + std::to_string(cap) +
                                               " (raise with --max-snf or CURVATURE_SNF_CAP)");

    HomologyOptions options;
    options.snf_cap_n = cap;
    const HomologyReport report = verify_homology(*a.n, options);

    if (!a.export_dir.empty())
        export_boundaries(boundary_matrices(build_state_complex(*a.n).complex), a.export_dir);

    Json doc = to_json(report);
    Json groups = Json::array();
    for (const auto& d : report.degrees) {
        if (a.coeff == "z")
            groups.push_back(d.integer->to_string());
        else if (a.coeff == "q")
            groups.push_back(d.betti_q);
        else
            groups.push_back(d.betti_mod.at(detail::coefficient_prime(a.coeff)));
    }
    doc["coeff"] = a.coeff;
    doc["groups"] = groups;
    out << doc.dump(2) << "\n";
    return report.passed() ? kExitOk : kExitDomain;
}

inline int cmd_locate(const std::string& path, std::ostream& out)
{
    const DistanceMatrix m = parse_distance_matrix(detail::read_input(path));
    const MinimalSimplex s = minimal_simplex(m);
    Json doc = to_json(s);
    doc["n"] = m.size();
    out << doc.dump(2) << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string range = "2..6";
    std::uint64_t samples = 100;
    std::uint64_t seed = 1;
    int isometries = 100;
    bool tamper_transpose = false;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    const auto [lo, hi] = detail::parse_range(a.range);
    PropertyOptions options;
    options.samples = a.samples;
    options.seed = a.seed;
    options.isometries_per_sample = a.isometries;
    if (a.tamper_transpose) {
        // Smoke test for the suite: labels are reversed but signs are kept.
        options.transpose = [](const ClusterStructure& c) {
            std::vector<int> values(c.n());
            for (std::size_t i = 0; i < c.n(); ++i)
                values[i] = c.label(i) == 1 ? c[i] : c.sign(i) * (c.m() + 2 - c.label(i));
            return ClusterStructure(std::move(values), c.m());
        };
    }
    const auto results = run_identity_suite(lo, hi, options);

    Json props = Json::array();
    for (const auto& r : results) {
        Json entry{{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}};
        if (r.counterexample)
            entry["counterexample"] = *r.counterexample;
        props.push_back(std::move(entry));
    }
    const bool ok = all_passed(results);
    out << Json{{"n", {lo, hi}}, {"samples", a.samples}, {"seed", a.seed}, {"properties", props}, {"passed", ok}}
               .dump(2)
        << "\n";
    return ok ? kExitOk : kExitDomain;
}

inline int cmd_elliptope(const std::string& path, double psd_tol, double rank_tol, std::ostream& out)
{
    const DistanceMatrix m = parse_distance_matrix(detail::read_input(path));
    Json doc = to_json(elliptope_membership(m, psd_tol, rank_tol));
    doc["n"] = m.size();
    out << doc.dump(2) << "\n";
    return kExitOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Curvature sets of the circle: state complexes, homology and elliptopes", "curvature"};
    app.require_subcommand(1);

    EnumerateArgs enumerate_args;
    std::string json_only = "json";
    auto* enumerate = app.add_subcommand("enumerate", "List cluster structures or export the state complex");
    enumerate->add_option("--n", enumerate_args.n, "Number of points")->required();
    enumerate->add_option("--m", enumerate_args.m, "Degrees of freedom; lists (m,n)-cluster structures");
    enumerate->add_flag("--complex", enumerate_args.complex, "Export the full state complex");
    enumerate->add_flag("--no-labels", enumerate_args.no_labels, "Omit cluster-structure labels from the export");
    enumerate->add_option("--format", enumerate_args.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    HomologyArgs homology_args;
    auto* homology = app.add_subcommand("homology", "Homology of St_n checked against the closed form");
    homology->add_option("--n", homology_args.n, "Number of points");
    homology->add_option("--coeff", homology_args.coeff, "Coefficients reported in `groups`")
        ->check(CLI::IsMember({"q", "gf2", "gf3", "z"}));
    homology->add_option("--max-snf", homology_args.max_snf, "Largest n for Smith normal form");
    homology->add_option("--input", homology_args.input, "Complex JSON (as written by enumerate) instead of St_n");
    homology->add_option("--export-boundaries", homology_args.export_dir,
                         "Directory receiving boundary matrices as row/col/value triples");
    homology->add_option("--format", json_only, "Output format")->check(CLI::IsMember({"json"}));

    std::string locate_path;
    auto* locate = app.add_subcommand("locate", "Minimal simplex of St_n containing a distance matrix");
    locate->add_option("matrix", locate_path, "Distance matrix file, or - for stdin")->required();
    locate->add_option("--format", json_only, "Output format")->check(CLI::IsMember({"json"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the seeded identity suite");
    verify->add_option("--n", verify_args.range, "N or A..B");
    verify->add_option("--samples", verify_args.samples, "Samples per n");
    verify->add_option("--seed", verify_args.seed, "Random seed");
    verify->add_option("--isometries", verify_args.isometries, "Random isometries per sample");
    verify->add_flag("--tamper-transpose", verify_args.tamper_transpose)->group("");
    verify->add_option("--format", json_only, "Output format")->check(CLI::IsMember({"json"}));

    std::string elliptope_path;
    double psd_tol = kPsdTolerance;
    double rank_tol = kRankTolerance;
    auto* elliptope = app.add_subcommand("elliptope", "PSD and rank of the entrywise cosine of a distance matrix");
    elliptope->add_option("matrix", elliptope_path, "Distance matrix file, or - for stdin")->required();
    elliptope->add_option("--psd-tol", psd_tol, "Eigenvalues above -tol count as nonnegative");
    elliptope->add_option("--rank-tol", rank_tol, "Eigenvalues above tol count toward the rank");
    elliptope->add_option("--format", json_only, "Output format")->check(CLI::IsMember({"json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(enumerate_args, out);
        if (*homology)
            return cmd_homology(homology_args, out);
        if (*locate)
            return cmd_locate(locate_path, out);
        if (*verify)
            return cmd_verify(verify_args, out);
        if (*elliptope)
            return cmd_elliptope(elliptope_path, psd_tol, rank_tol, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const nlohmann::json::exception& e) {
        err << "error: ParseError: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace curvature::cli
