#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ghdist/metric_space.hpp"
#include "ghdist/topo_model.hpp"

namespace support {

// Entries drawn from [1, 2] satisfy every triangle inequality outright, so
// any symmetric fill of the box is a metric.
inline ghdist::FiniteMetricSpace random_box_metric(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> u(1.0, 2.0);
    std::vector<std::vector<double>> grid(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            grid[i][j] = grid[j][i] = u(rng);
    return ghdist::FiniteMetricSpace::validated(grid);
}

inline ghdist::FiniteMetricSpace random_cloud_metric(std::mt19937& rng, int n, int dim) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> points(n, std::vector<double>(dim));
    for (auto& p : points)
        for (auto& c : p)
            c = u(rng);
    return ghdist::from_points(points, ghdist::Norm::L2);
}

inline std::vector<std::pair<int, int>> random_edges(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flip(rng))
                edges.emplace_back(i, j);
    return edges;
}

inline ghdist::CombinatorialSpace random_model(std::mt19937& rng, int n, double p) {
    return ghdist::CombinatorialSpace::validated(random_box_metric(rng, n),
                                                 random_edges(rng, n, p));
}

inline ghdist::FiniteMetricSpace line_space(const std::vector<double>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<std::vector<double>> grid(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            grid[i][j] = values[i] < values[j] ? values[j] - values[i] : values[i] - values[j];
    return ghdist::FiniteMetricSpace::validated(grid);
}

} // namespace support
