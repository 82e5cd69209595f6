#include "ghdist/io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ghdist {

namespace {

std::vector<std::vector<double>> number_grid(const Json& j, const char* field) {
    if (!j.is_array() || j.empty())
        throw DomainError(DomainError::Code::BadParameters,
                          std::string(field) + " must be a non-empty array of rows");
    std::vector<std::vector<double>> grid;
    for (const auto& row : j) {
        if (!row.is_array())
            throw DomainError(DomainError::Code::BadParameters,
                              std::string(field) + " rows must be arrays");
        std::vector<double> values;
        for (const auto& v : row) {
            if (!v.is_number())
                throw DomainError(DomainError::Code::BadParameters,
                                  std::string(field) + " entries must be numbers");
            values.push_back(v.get<double>());
        }
        grid.push_back(std::move(values));
    }
    return grid;
}

std::vector<int> int_list(const Json& j, const char* field) {
    if (!j.is_array())
        throw DomainError(DomainError::Code::BadParameters,
                          std::string(field) + " must be an array of integers");
    std::vector<int> values;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw DomainError(DomainError::Code::BadParameters,
                              std::string(field) + " entries must be integers");
        values.push_back(v.get<int>());
    }
    return values;
}

} // namespace

FiniteMetricSpace space_from_json(const Json& j, double tolerance) {
    if (!j.is_object())
        throw DomainError(DomainError::Code::BadParameters, "space must be a JSON object");

    if (j.contains("points")) {
        const auto points = number_grid(j.at("points"), "points");
        Norm norm = Norm::L2;
        if (j.contains("norm")) {
            const std::string name = j.at("norm").get<std::string>();
            if (name == "l2")
                norm = Norm::L2;
            else if (name == "l1")
                norm = Norm::L1;
            else if (name == "linf")
                norm = Norm::Linf;
            else
                throw DomainError(DomainError::Code::BadParameters,
                                  "norm must be one of l2, l1, linf");
        }
        return from_points(points, norm);
    }

    if (!j.contains("dist"))
        throw DomainError(DomainError::Code::BadParameters,
                          "space needs either a dist grid or a points list");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array())
            throw DomainError(DomainError::Code::BadParameters, "labels must be an array");
        for (const auto& l : j.at("labels"))
            labels.push_back(l.get<std::string>());
    }
    return FiniteMetricSpace::validated(number_grid(j.at("dist"), "dist"), std::move(labels),
                                        tolerance);
}

Json space_to_json(const FiniteMetricSpace& x) {
    Json j = Json::object();
    if (x.has_labels())
        j["labels"] = x.labels();
    Json rows = Json::array();
    for (int i = 0; i < x.size(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < x.size(); ++k)
            row.push_back(x.dist(i, k));
        rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
    return j;
}

CombinatorialSpace combinatorial_from_json(const Json& j, double tolerance) {
    if (!j.is_object() || !j.contains("metric") || !j.contains("edges"))
        throw DomainError(DomainError::Code::BadParameters,
                          "model needs a metric and an explicit edge list");
    FiniteMetricSpace metric = space_from_json(j.at("metric"), tolerance);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        const auto pair = int_list(e, "edges");
        if (pair.size() != 2)
            throw DomainError(DomainError::Code::BadParameters,
                              "each edge must hold exactly two endpoints");
        edges.emplace_back(pair[0], pair[1]);
    }
    return CombinatorialSpace::validated(std::move(metric), std::move(edges));
}

Json combinatorial_to_json(const CombinatorialSpace& xc) {
    Json j = Json::object();
    j["metric"] = space_to_json(xc.metric());
    Json edges = Json::array();
    for (const auto& [a, b] : xc.edges())
        edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    return j;
}

MapPair map_pair_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("f") || !j.contains("g"))
        throw DomainError(DomainError::Code::BadParameters,
                          "map pair needs both index arrays f and g");
    MapPair p;
    p.f = int_list(j.at("f"), "f");
    p.g = int_list(j.at("g"), "g");
    return p;
}

Json map_pair_to_json(const MapPair& p) {
    Json j = Json::object();
    j["f"] = p.f;
    j["g"] = p.g;
    return j;
}

Json distance_result_to_json(const DistanceResult& r) {
    Json j = Json::object();
    j["value"] = r.value;
    j["f"] = r.certificate.f;
    j["g"] = r.certificate.g;
    j["nodes"] = r.nodes_explored;
    j["budget_exhausted"] = r.budget_exhausted;
    j["bound_used"] = r.bound_used;
    return j;
}

Json bound_report_to_json(const BoundReport& report) {
    Json j = Json::object();
    j["lower"] = report.lower;
    j["upper"] = report.upper;
    Json lower_terms = Json::array();
    for (const auto& [name, value] : report.lower_terms)
        lower_terms.push_back(Json{{"name", name}, {"value", value}});
    j["lower_terms"] = std::move(lower_terms);
    Json upper_terms = Json::array();
    for (const auto& [name, value] : report.upper_terms)
        upper_terms.push_back(Json{{"name", name}, {"value", value}});
    j["upper_terms"] = std::move(upper_terms);
    j["notes"] = report.notes;
    return j;
}

Json fixture_to_json(const Fixture& fix) {
    Json j = Json::object();
    j["name"] = fix.name;
    Json spaces = Json::object();
    for (const auto& [name, space] : fix.spaces)
        spaces[name] = combinatorial_to_json(space);
    j["spaces"] = std::move(spaces);
    Json maps = Json::object();
    for (const auto& [name, pair] : fix.maps)
        maps[name] = map_pair_to_json(pair);
    j["maps"] = std::move(maps);
    Json sets = Json::object();
    for (const auto& [name, indices] : fix.index_sets)
        sets[name] = indices;
    j["index_sets"] = std::move(sets);
    Json references = Json::array();
    for (const auto& ref : fix.references)
        references.push_back(
            Json{{"name", ref.name}, {"value", ref.value}, {"note", ref.note}});
    j["references"] = std::move(references);
    return j;
}

Json check_report_to_json(const CheckReport& report) {
    Json j = Json::object();
    Json rows = Json::array();
    for (const auto& row : report.rows)
        rows.push_back(Json{{"name", row.name},
                            {"value", row.value},
                            {"reference", row.reference},
                            {"pass", row.pass},
                            {"note", row.note}});
    j["rows"] = std::move(rows);
    j["all_pass"] = report.all_pass;
    return j;
}

} // namespace ghdist
