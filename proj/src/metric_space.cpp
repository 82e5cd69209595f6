#include "ghdist/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace ghdist {

namespace {

std::string index_pair(int i, int j) {
    std::ostringstream out;
    out << "(" << i << "," << j << ")";
    return out.str();
}

} // namespace

FiniteMetricSpace FiniteMetricSpace::validated(const std::vector<std::vector<double>>& grid,
                                               std::vector<std::string> labels,
                                               double tolerance) {
    const int n = static_cast<int>(grid.size());
    if (n == 0)
        throw MetricError(MetricError::Kind::NotSquare, "distance grid is empty");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(grid[i].size()) != n)
            throw MetricError(MetricError::Kind::NotSquare,
                              "row " + std::to_string(i) + " has " +
                                  std::to_string(grid[i].size()) + " entries, expected " +
                                  std::to_string(n),
                              i);
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw MetricError(MetricError::Kind::NotSquare,
                          "label list length does not match grid size");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!std::isfinite(grid[i][j]))
                throw MetricError(MetricError::Kind::NonFinite,
                                  "non-finite entry at " + index_pair(i, j), i, j);

    for (int i = 0; i < n; ++i)
        if (std::abs(grid[i][i]) > tolerance)
            throw MetricError(MetricError::Kind::NonzeroDiagonal,
                              "diagonal entry " + std::to_string(i) + " is " +
                                  std::to_string(grid[i][i]),
                              i);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(grid[i][j] - grid[j][i]) > tolerance)
                throw MetricError(MetricError::Kind::Asymmetric,
                                  "entries at " + index_pair(i, j) + " and " + index_pair(j, i) +
                                      " differ",
                                  i, j);

    // Store an exactly symmetric grid with a zero diagonal; the upper
    // triangle of the input wins.
    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            flat[static_cast<size_t>(i) * n + j] = grid[i][j];
            flat[static_cast<size_t>(j) * n + i] = grid[i][j];
        }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flat[static_cast<size_t>(i) * n + j] <= tolerance)
                throw MetricError(MetricError::Kind::NegativeOrZeroOffDiagonal,
                                  "distance at " + index_pair(i, j) + " is not positive", i, j);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j)
                    continue;
                const double direct = flat[static_cast<size_t>(i) * n + k];
                const double via = flat[static_cast<size_t>(i) * n + j] +
                                   flat[static_cast<size_t>(j) * n + k];
                if (direct > via + tolerance)
                    throw MetricError(MetricError::Kind::TriangleViolation,
                                      "d" + index_pair(i, k) + " exceeds d" + index_pair(i, j) +
                                          " + d" + index_pair(j, k),
                                      i, j, k);
            }
        }

    return FiniteMetricSpace(n, std::move(flat), std::move(labels));
}

FiniteMetricSpace FiniteMetricSpace::unchecked(int n, std::vector<double> flat,
                                               std::vector<std::string> labels) {
    if (n <= 0 || flat.size() != static_cast<size_t>(n) * n)
        throw DomainError(DomainError::Code::SizeMismatch,
                          "flat grid size does not match point count");
    return FiniteMetricSpace(n, std::move(flat), std::move(labels));
}

FiniteMetricSpace FiniteMetricSpace::one_point(std::string label) {
    return FiniteMetricSpace(1, {0.0}, {std::move(label)});
}

double FiniteMetricSpace::eccentricity(int i) const {
    double ecc = 0.0;
    for (int j = 0; j < n_; ++j)
        ecc = std::max(ecc, dist(i, j));
    return ecc;
}

SpaceInvariants invariants(const FiniteMetricSpace& x) {
    const int n = x.size();
    SpaceInvariants inv;
    if (n == 1)
        return inv;

    inv.chebyshev_r = std::numeric_limits<double>::infinity();
    inv.s_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double ecc = 0.0;
        double nearest = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            ecc = std::max(ecc, x.dist(i, j));
            nearest = std::min(nearest, x.dist(i, j));
        }
        inv.diam = std::max(inv.diam, ecc);
        inv.chebyshev_r = std::min(inv.chebyshev_r, ecc);
        inv.d_val = std::max(inv.d_val, nearest);
        inv.s_val = std::min(inv.s_val, nearest);
    }
    return inv;
}

DistSpectrum dist_spectrum(const FiniteMetricSpace& x) {
    std::set<double> seen(x.flat().begin(), x.flat().end());
    seen.insert(0.0);
    return DistSpectrum{std::vector<double>(seen.begin(), seen.end())};
}

namespace {

void check_subset(const FiniteMetricSpace& x, std::span<const int> a, const char* which) {
    if (a.empty())
        throw DomainError(DomainError::Code::EmptySubset,
                          std::string(which) + " subset is empty");
    for (int idx : a)
        if (idx < 0 || idx >= x.size())
            throw DomainError(DomainError::Code::OutOfRange,
                              std::string(which) + " subset index " + std::to_string(idx) +
                                  " out of range");
}

double directed_hausdorff(const FiniteMetricSpace& x, std::span<const int> from,
                          std::span<const int> to) {
    double worst = 0.0;
    for (int p : from) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int q : to)
            nearest = std::min(nearest, x.dist(p, q));
        worst = std::max(worst, nearest);
    }
    return worst;
}

} // namespace

double hausdorff(const FiniteMetricSpace& x, std::span<const int> a, std::span<const int> b) {
    check_subset(x, a, "first");
    check_subset(x, b, "second");
    return std::max(directed_hausdorff(x, a, b), directed_hausdorff(x, b, a));
}

FiniteMetricSpace scale(const FiniteMetricSpace& x, double factor) {
    if (factor < 0.0 || !std::isfinite(factor))
        throw DomainError(DomainError::Code::NegativeScale,
                          "scale factor must be finite and non-negative");
    if (factor == 0.0) {
        std::string label = x.has_labels() ? x.labels().front() : "pt";
        return FiniteMetricSpace::one_point(std::move(label));
    }
    std::vector<double> flat = x.flat();
    for (double& v : flat)
        v *= factor;
    return FiniteMetricSpace::unchecked(x.size(), std::move(flat), x.labels());
}

FiniteMetricSpace from_points(const std::vector<std::vector<double>>& points, Norm norm) {
    const int n = static_cast<int>(points.size());
    if (n == 0)
        throw DomainError(DomainError::Code::BadParameters, "point list is empty");
    const size_t dim = points[0].size();
    for (int i = 1; i < n; ++i)
        if (points[i].size() != dim)
            throw DomainError(DomainError::Code::DimensionMismatch,
                              "point " + std::to_string(i) + " has dimension " +
                                  std::to_string(points[i].size()) + ", expected " +
                                  std::to_string(dim));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw DomainError(DomainError::Code::DuplicatePoint,
                                  "points " + std::to_string(i) + " and " + std::to_string(j) +
                                      " coincide");

    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = 0.0;
            switch (norm) {
            case Norm::L2: {
                double sq = 0.0;
                for (size_t c = 0; c < dim; ++c) {
                    const double diff = points[i][c] - points[j][c];
                    sq += diff * diff;
                }
                d = std::sqrt(sq);
                break;
            }
            case Norm::L1:
                for (size_t c = 0; c < dim; ++c)
                    d += std::abs(points[i][c] - points[j][c]);
                break;
            case Norm::Linf:
                for (size_t c = 0; c < dim; ++c)
                    d = std::max(d, std::abs(points[i][c] - points[j][c]));
                break;
            }
            flat[static_cast<size_t>(i) * n + j] = d;
            flat[static_cast<size_t>(j) * n + i] = d;
        }
    return FiniteMetricSpace::unchecked(n, std::move(flat));
}

FiniteMetricSpace subspace(const FiniteMetricSpace& x, std::span<const int> keep) {
    check_subset(x, keep, "kept");
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = a + 1; b < keep.size(); ++b)
            if (keep[a] == keep[b])
                throw DomainError(DomainError::Code::BadParameters,
                                  "kept index " + std::to_string(keep[a]) + " repeats");

    const int m = static_cast<int>(keep.size());
    std::vector<double> flat(static_cast<size_t>(m) * m, 0.0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            flat[static_cast<size_t>(a) * m + b] = x.dist(keep[a], keep[b]);
    std::vector<std::string> labels;
    if (x.has_labels()) {
        labels.reserve(keep.size());
        for (int idx : keep)
            labels.push_back(x.labels()[idx]);
    }
    return FiniteMetricSpace::unchecked(m, std::move(flat), std::move(labels));
}

} // namespace ghdist
