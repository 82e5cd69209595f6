#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghdist/bounds.hpp"
#include "ghdist/errors.hpp"
#include "ghdist/fixtures.hpp"
#include "ghdist/geodesic.hpp"
#include "ghdist/io.hpp"
#include "ghdist/metric_space.hpp"
#include "ghdist/search.hpp"
#include "ghdist/topo_model.hpp"

namespace {

using ghdist::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw std::runtime_error("cannot read " + path);
    return buf.str();
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

struct LoadedFile {
    std::string path;
    std::string bytes;
    Json doc;
};

LoadedFile load_doc(const std::string& path) {
    LoadedFile file{path, read_file(path), Json()};
    file.doc = Json::parse(file.bytes);
    return file;
}

Json input_entry(const LoadedFile& file) {
    return Json{{"path", file.path}, {"digest", fnv1a_digest(file.bytes)}};
}

Json budget_json(std::uint64_t limit) {
    return limit == ghdist::kNoBudget ? Json(nullptr) : Json(limit);
}

bool is_model_doc(const Json& doc) {
    return doc.is_object() && doc.contains("metric") && doc.contains("edges");
}

// Accepts either a bare space document or a model; gh and the bound
// computations only need the metric part.
ghdist::FiniteMetricSpace metric_part(const Json& doc, double tolerance) {
    if (is_model_doc(doc))
        return ghdist::combinatorial_from_json(doc, tolerance).metric();
    return ghdist::space_from_json(doc, tolerance);
}

ghdist::BoundReport combined_bounds(const ghdist::CombinatorialSpace& xc,
                                    const ghdist::CombinatorialSpace& yc) {
    auto report = ghdist::lower_bounds(xc.metric(), yc.metric());
    report.lower_terms.emplace_back("connectivity", ghdist::ghc_lower_connectivity(xc, yc));
    report.lower_terms.emplace_back("component_split",
                                    ghdist::ghc_lower_component_split(xc, yc));
    for (const auto& [name, value] : report.lower_terms)
        report.lower = std::max(report.lower, value);
    return report;
}

void emit(const Json& report) {
    std::cout << report.dump(2) << "\n";
}

struct CloudDoc {
    std::vector<std::vector<double>> points;
    std::string norm = "l2";
};

CloudDoc cloud_from(const Json& doc, const std::string& which) {
    if (!doc.is_object() || !doc.contains("points"))
        throw ghdist::DomainError(ghdist::DomainError::Code::BadParameters,
                                  "hausdorff needs point-cloud input, " + which +
                                      " has no points list");
    CloudDoc cloud;
    for (const auto& row : doc.at("points")) {
        if (!row.is_array())
            throw ghdist::DomainError(ghdist::DomainError::Code::BadParameters,
                                      "points rows must be arrays");
        std::vector<double> point;
        for (const auto& v : row) {
            if (!v.is_number())
                throw ghdist::DomainError(ghdist::DomainError::Code::BadParameters,
                                          "point coordinates must be numbers");
            point.push_back(v.get<double>());
        }
        cloud.points.push_back(std::move(point));
    }
    if (doc.contains("norm"))
        cloud.norm = doc.at("norm").get<std::string>();
    return cloud;
}

ghdist::Norm parse_norm(const std::string& name) {
    if (name == "l2")
        return ghdist::Norm::L2;
    if (name == "l1")
        return ghdist::Norm::L1;
    if (name == "linf")
        return ghdist::Norm::Linf;
    throw ghdist::DomainError(ghdist::DomainError::Code::BadParameters,
                              "norm must be one of l2, l1, linf");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gromov-Hausdorff distances between finite metric spaces"};
    app.require_subcommand(1);

    std::uint64_t budget = ghdist::kNoBudget;
    int threads = 1;
    double tolerance = ghdist::kDefaultTolerance;
    bool json_flag = false;
    app.add_option("--budget", budget, "node cap for the searches")->envname("GHDIST_BUDGET");
    app.add_option("--threads", threads, "worker threads for the search phase");
    app.add_option("--tolerance", tolerance, "metric validation tolerance");
    app.add_flag("--json", json_flag, "machine output (always on; accepted for compatibility)");

    auto* validate = app.add_subcommand("validate", "check a space file against the metric axioms");
    validate->fallthrough();
    std::string validate_path;
    validate->add_option("path", validate_path, "space or model JSON file")->required();

    auto* dist = app.add_subcommand("dist", "distance between two spaces");
    dist->fallthrough();
    std::string dist_kind, dist_a, dist_b;
    bool bounds_only = false;
    dist->add_option("kind", dist_kind, "gh, ghc or hausdorff")
        ->required()
        ->check(CLI::IsMember({"gh", "ghc", "hausdorff"}));
    dist->add_option("a", dist_a, "first input file")->required();
    dist->add_option("b", dist_b, "second input file")->required();
    dist->add_flag("--bounds-only", bounds_only, "report bounds without running the search");

    auto* bounds = app.add_subcommand("bounds", "cheap lower and upper estimates");
    bounds->fallthrough();
    std::string bounds_a, bounds_b;
    bounds->add_option("a", bounds_a, "first input file")->required();
    bounds->add_option("b", bounds_b, "second input file")->required();

    auto* geodesic = app.add_subcommand("geodesic", "straight-line family between two spaces");
    geodesic->fallthrough();
    std::string geo_a, geo_b;
    int steps = 4;
    double t_value = 0.0;
    geodesic->add_option("a", geo_a, "first input file")->required();
    geodesic->add_option("b", geo_b, "second input file")->required();
    auto* opt_steps =
        geodesic->add_option("--steps", steps, "number of legs to measure")->check(CLI::PositiveNumber);
    auto* opt_t = geodesic->add_option("--t", t_value, "emit the interpolated space at this time");
    opt_t->excludes(opt_steps);
    opt_steps->excludes(opt_t);

    auto* fixture = app.add_subcommand("fixture", "emit a named fixture as JSON");
    fixture->fallthrough();
    std::string fixture_name;
    int fix_big_n = -1;
    int fix_k = 5;
    int fix_level = 2;
    int fix_grid_exp = 7;
    int fix_grid = 24;
    fixture->add_option("name", fixture_name, "omega, shifted-pairs, interval-stack, triode or checks")
        ->required()
        ->check(CLI::IsMember({"omega", "shifted-pairs", "interval-stack", "triode", "checks"}));
    fixture->add_option("--N", fix_big_n, "spoke or pair count (omega, shifted-pairs)");
    fixture->add_option("--K", fix_k, "interval count (interval-stack)");
    fixture->add_option("--n", fix_level, "level (interval-stack) or arm parameter (triode)");
    fixture->add_option("--grid-exp", fix_grid_exp, "sampling exponent (interval-stack)");
    fixture->add_option("--grid", fix_grid, "samples per unit length (triode)");

    CLI11_PARSE(app, argc, argv);

    const auto started = std::chrono::steady_clock::now();
    auto wall_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };
    Json parameters{{"budget", budget_json(budget)}, {"threads", threads}, {"tolerance", tolerance}};
    ghdist::SearchOptions search_options;
    search_options.budget = budget;
    search_options.threads = threads;

    try {
        if (*validate) {
            LoadedFile file = load_doc(validate_path);
            ghdist::FiniteMetricSpace space = [&] {
                try {
                    return metric_part(file.doc, tolerance);
                } catch (const ghdist::MetricError& e) {
                    std::cerr << "invalid: " << e.what() << "\n";
                    std::exit(2);
                }
            }();
            Json report{{"command", "validate"},
                        {"inputs", Json{{"a", input_entry(file)}}},
                        {"parameters", parameters},
                        {"result", Json{{"valid", true}, {"points", space.size()}}}};
            emit(report);
            std::cerr << "valid: " << space.size() << " points  wall_ms=" << wall_ms() << "\n";
            return 0;
        }

        if (*dist) {
            LoadedFile fa = load_doc(dist_a);
            LoadedFile fb = load_doc(dist_b);
            Json report{{"command", "dist " + dist_kind},
                        {"inputs", Json{{"a", input_entry(fa)}, {"b", input_entry(fb)}}},
                        {"parameters", parameters}};
            int code = 0;

            if (dist_kind == "hausdorff") {
                CloudDoc ca = cloud_from(fa.doc, "a");
                CloudDoc cb = cloud_from(fb.doc, "b");
                if (ca.norm != cb.norm)
                    throw ghdist::DomainError(ghdist::DomainError::Code::BadParameters,
                                              "hausdorff inputs must share one norm");
                std::vector<std::vector<double>> cloud;
                auto place = [&](const std::vector<double>& p) {
                    for (std::size_t i = 0; i < cloud.size(); ++i)
                        if (cloud[i] == p)
                            return static_cast<int>(i);
                    cloud.push_back(p);
                    return static_cast<int>(cloud.size()) - 1;
                };
                std::vector<int> ia, ib;
                for (const auto& p : ca.points)
                    ia.push_back(place(p));
                for (const auto& p : cb.points)
                    ib.push_back(place(p));
                auto uniq = [](std::vector<int>& v) {
                    std::sort(v.begin(), v.end());
                    v.erase(std::unique(v.begin(), v.end()), v.end());
                };
                uniq(ia);
                uniq(ib);
                ghdist::FiniteMetricSpace space = ghdist::from_points(cloud, parse_norm(ca.norm));
                const double value = ghdist::hausdorff(space, ia, ib);
                report["result"] = Json{{"value", value},
                                        {"union_size", space.size()},
                                        {"a_size", static_cast<int>(ia.size())},
                                        {"b_size", static_cast<int>(ib.size())}};
                report["budget"] = Json{{"limit", budget_json(budget)}, {"nodes", 0}, {"exhausted", false}};
                std::cerr << "hausdorff " << value << "  wall_ms=" << wall_ms() << "\n";
            } else if (dist_kind == "gh") {
                ghdist::FiniteMetricSpace x = metric_part(fa.doc, tolerance);
                ghdist::FiniteMetricSpace y = metric_part(fb.doc, tolerance);
                if (bounds_only) {
                    report["result"] = ghdist::bound_report_to_json(ghdist::lower_bounds(x, y));
                    report["budget"] =
                        Json{{"limit", budget_json(budget)}, {"nodes", 0}, {"exhausted", false}};
                    std::cerr << "gh bounds only  wall_ms=" << wall_ms() << "\n";
                } else {
                    ghdist::DistanceResult result = ghdist::gh_exact(x, y, search_options);
                    report["result"] = ghdist::distance_result_to_json(result);
                    report["budget"] = Json{{"limit", budget_json(budget)},
                                            {"nodes", result.nodes_explored},
                                            {"exhausted", result.budget_exhausted}};
                    code = result.budget_exhausted ? 3 : 0;
                    std::cerr << "gh " << result.value << " nodes=" << result.nodes_explored
                              << " (" << result.bound_used << ")  wall_ms=" << wall_ms() << "\n";
                }
            } else {
                if (!is_model_doc(fa.doc) || !is_model_doc(fb.doc))
                    throw ghdist::DomainError(
                        ghdist::DomainError::Code::BadParameters,
                        "ghc needs explicit model inputs with metric and edges on both sides");
                ghdist::CombinatorialSpace xc = ghdist::combinatorial_from_json(fa.doc, tolerance);
                ghdist::CombinatorialSpace yc = ghdist::combinatorial_from_json(fb.doc, tolerance);
                if (bounds_only) {
                    report["result"] = ghdist::bound_report_to_json(combined_bounds(xc, yc));
                    report["budget"] =
                        Json{{"limit", budget_json(budget)}, {"nodes", 0}, {"exhausted", false}};
                    std::cerr << "ghc bounds only  wall_ms=" << wall_ms() << "\n";
                } else {
                    ghdist::DistanceResult result = ghdist::ghc_exact(xc, yc, search_options);
                    report["result"] = ghdist::distance_result_to_json(result);
                    report["budget"] = Json{{"limit", budget_json(budget)},
                                            {"nodes", result.nodes_explored},
                                            {"exhausted", result.budget_exhausted}};
                    code = result.budget_exhausted ? 3 : 0;
                    std::cerr << "ghc " << result.value << " nodes=" << result.nodes_explored
                              << " (" << result.bound_used << ")  wall_ms=" << wall_ms() << "\n";
                }
            }
            emit(report);
            return code;
        }

        if (*bounds) {
            LoadedFile fa = load_doc(bounds_a);
            LoadedFile fb = load_doc(bounds_b);
            ghdist::BoundReport rep;
            if (is_model_doc(fa.doc) && is_model_doc(fb.doc))
                rep = combined_bounds(ghdist::combinatorial_from_json(fa.doc, tolerance),
                                      ghdist::combinatorial_from_json(fb.doc, tolerance));
            else
                rep = ghdist::lower_bounds(metric_part(fa.doc, tolerance),
                                           metric_part(fb.doc, tolerance));
            Json report{{"command", "bounds"},
                        {"inputs", Json{{"a", input_entry(fa)}, {"b", input_entry(fb)}}},
                        {"parameters", parameters},
                        {"result", ghdist::bound_report_to_json(rep)}};
            emit(report);
            std::cerr << "bounds [" << rep.lower << ", " << rep.upper << "]  wall_ms=" << wall_ms()
                      << "\n";
            return 0;
        }

        if (*geodesic) {
            LoadedFile fa = load_doc(geo_a);
            LoadedFile fb = load_doc(geo_b);
            ghdist::FiniteMetricSpace x = metric_part(fa.doc, tolerance);
            ghdist::FiniteMetricSpace y = metric_part(fb.doc, tolerance);
            ghdist::DistanceResult endpoint = ghdist::gh_exact(x, y, search_options);
            ghdist::InterpolantFamily family =
                ghdist::make_family(x, y, ghdist::corr_from_maps(endpoint.certificate));
            Json report{{"command", "geodesic"},
                        {"inputs", Json{{"a", input_entry(fa)}, {"b", input_entry(fb)}}},
                        {"parameters", parameters}};
            if (*opt_t) {
                report["result"] = Json{{"t", t_value},
                                        {"dis_r", family.dis_r},
                                        {"space", ghdist::space_to_json(
                                                      ghdist::interpolate(family, t_value))}};
                std::cerr << "interpolant at t=" << t_value << "  wall_ms=" << wall_ms() << "\n";
            } else {
                Json legs = Json::array();
                double total_measured = 0.0;
                double total_bound = 0.0;
                for (int i = 0; i < steps; ++i) {
                    const double t0 = static_cast<double>(i) / steps;
                    const double t1 = static_cast<double>(i + 1) / steps;
                    ghdist::GeodesicDefect leg =
                        ghdist::geodesic_defect(family, t0, t1, search_options);
                    total_measured += leg.measured;
                    total_bound += leg.bound;
                    legs.push_back(Json{{"t0", t0},
                                        {"t1", t1},
                                        {"bound", leg.bound},
                                        {"measured", leg.measured}});
                }
                report["result"] = Json{{"endpoint_value", endpoint.value},
                                        {"dis_r", family.dis_r},
                                        {"legs", std::move(legs)},
                                        {"total_measured", total_measured},
                                        {"total_bound", total_bound}};
                std::cerr << steps << " legs, measured " << total_measured << " within bound "
                          << total_bound << "  wall_ms=" << wall_ms() << "\n";
            }
            report["budget"] = Json{{"limit", budget_json(budget)},
                                    {"nodes", endpoint.nodes_explored},
                                    {"exhausted", endpoint.budget_exhausted}};
            emit(report);
            return 0;
        }

        // fixture
        Json report{{"command", "fixture " + fixture_name}, {"inputs", Json::object()}};
        Json fixture_params = parameters;
        if (fixture_name == "checks") {
            const std::uint64_t checks_budget = budget == ghdist::kNoBudget ? 2'000'000 : budget;
            fixture_params["budget"] = checks_budget;
            report["parameters"] = fixture_params;
            ghdist::CheckReport checks = ghdist::counterexample_checks(checks_budget);
            report["result"] = ghdist::check_report_to_json(checks);
            emit(report);
            int passed = 0;
            for (const auto& row : checks.rows)
                passed += row.pass ? 1 : 0;
            std::cerr << "checks: " << passed << "/" << checks.rows.size() << " pass  wall_ms="
                      << wall_ms() << "\n";
            return 0;
        }
        ghdist::Fixture fix;
        if (fixture_name == "omega") {
            const int n = fix_big_n < 0 ? 8 : fix_big_n;
            fixture_params["N"] = n;
            fix = ghdist::build_omega_space(n);
        } else if (fixture_name == "shifted-pairs") {
            const int n = fix_big_n < 0 ? 6 : fix_big_n;
            fixture_params["N"] = n;
            fix = ghdist::build_shifted_pairs(n);
        } else if (fixture_name == "interval-stack") {
            fixture_params["K"] = fix_k;
            fixture_params["n"] = fix_level;
            fixture_params["grid_exp"] = fix_grid_exp;
            fix = ghdist::build_interval_stack(fix_k, fix_level, fix_grid_exp);
        } else {
            fixture_params["n"] = fix_level;
            fixture_params["grid"] = fix_grid;
            fix = ghdist::build_triode(fix_level, fix_grid);
        }
        report["parameters"] = fixture_params;
        report["result"] = ghdist::fixture_to_json(fix);
        emit(report);
        std::cerr << "fixture " << fix.name << ": " << fix.spaces.size() << " spaces, "
                  << fix.maps.size() << " maps  wall_ms=" << wall_ms() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
