#include "pair_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <thread>

namespace ghdist::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Ctx {
    const FiniteMetricSpace& x;
    const FiniteMetricSpace& y;
    const TopologyView* topo;
    int nx;
    int ny;
    std::vector<int> order_f;   // X points, decreasing eccentricity
    std::vector<int> order_g;   // Y points, decreasing eccentricity
    double dis_lower;
    double tolerance;
};

std::vector<int> by_decreasing_eccentricity(const FiniteMetricSpace& s) {
    std::vector<double> ecc(s.size());
    for (int i = 0; i < s.size(); ++i)
        ecc[i] = s.eccentricity(i);
    std::vector<int> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ecc[a] > ecc[b]; });
    return order;
}

int central_index(const FiniteMetricSpace& s) {
    int best = 0;
    double best_ecc = kInf;
    for (int i = 0; i < s.size(); ++i) {
        const double e = s.eccentricity(i);
        if (e < best_ecc) {
            best_ecc = e;
            best = i;
        }
    }
    return best;
}

double evaluate_pair(const std::vector<int>& f, const std::vector<int>& g,
                     const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    double dis = 0.0;
    const int nx = x.size(), ny = y.size();
    for (int i = 0; i < nx; ++i)
        for (int j = i + 1; j < nx; ++j)
            dis = std::max(dis, std::abs(x.dist(i, j) - y.dist(f[i], f[j])));
    for (int i = 0; i < ny; ++i)
        for (int j = i + 1; j < ny; ++j)
            dis = std::max(dis, std::abs(y.dist(i, j) - x.dist(g[i], g[j])));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            dis = std::max(dis, std::abs(x.dist(i, g[j]) - y.dist(f[i], j)));
    return dis;
}

bool edge_respecting(const std::vector<int>& f, const std::vector<std::uint8_t>& adj_from,
                     const std::vector<std::uint8_t>& adj_to, int n_from, int n_to) {
    for (int i = 0; i < n_from; ++i)
        for (int j = i + 1; j < n_from; ++j)
            if (adj_from[static_cast<size_t>(i) * n_from + j] && f[i] != f[j] &&
                !adj_to[static_cast<size_t>(f[i]) * n_to + f[j]])
                return false;
    return true;
}

// Any map sending the whole image-complement far from f(X) keeps the
// codistortion at least max_y d(y, f(X)); prune g entirely when that floor
// already reaches the incumbent.
double image_cover_floor(const Ctx& ctx, const std::vector<int>& f, double stop_at) {
    double cover = 0.0;
    for (int yy = 0; yy < ctx.ny; ++yy) {
        double nearest = kInf;
        for (int xx = 0; xx < ctx.nx; ++xx)
            nearest = std::min(nearest, ctx.y.dist(yy, f[xx]));
        cover = std::max(cover, nearest);
        if (cover >= stop_at)
            break;
    }
    return cover;
}

struct Candidate {
    double cost;
    int value;
    double floor_add;
};

// Phase 1: depth-first descent over f then g assignments. Points are taken
// in decreasing-eccentricity order, candidate images in increasing
// incremental cost, so the first full descent doubles as a constructive
// upper bound. No state is shared between workers; results stay
// deterministic for any thread count.
struct Worker {
    const Ctx& ctx;
    int slice_offset;
    int slice_step;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    bool done = false;          // incumbent matched the lower bound

    double best;
    std::vector<int> best_f, best_g;

    std::vector<int> f, g;
    std::vector<int> assigned_x, assigned_y;
    std::vector<int> commit_fx, commit_gy;  // component -> opposite component
    std::vector<std::vector<Candidate>> cand_f, cand_g;

    Worker(const Ctx& c, double initial_best, std::vector<int> init_f, std::vector<int> init_g,
           std::uint64_t budget_limit, int offset, int step)
        : ctx(c), slice_offset(offset), slice_step(step), budget(budget_limit),
          best(initial_best), best_f(std::move(init_f)), best_g(std::move(init_g)),
          f(c.nx, -1), g(c.ny, -1), cand_f(c.nx), cand_g(c.ny) {
        assigned_x.reserve(c.nx);
        assigned_y.reserve(c.ny);
        for (auto& buf : cand_f)
            buf.reserve(c.ny);
        for (auto& buf : cand_g)
            buf.reserve(c.nx);
        if (ctx.topo) {
            commit_fx.assign(ctx.topo->comp_diam_x.size(), -1);
            commit_gy.assign(ctx.topo->comp_diam_y.size(), -1);
        }
    }

    bool spend_node() {
        if (nodes >= budget) {
            exhausted = true;
            return false;
        }
        ++nodes;
        return true;
    }

    void run() { dfs_f(0, 0.0, 0.0); }

    void dfs_f(int depth, double terms, double floor_lb) {
        if (done || exhausted)
            return;
        if (depth == ctx.nx) {
            const double cover = image_cover_floor(ctx, f, best);
            if (std::max(floor_lb, cover) >= best)
                return;
            dfs_g(0, terms, floor_lb);
            return;
        }

        const int xk = ctx.order_f[depth];
        const int cx = ctx.topo ? ctx.topo->comp_x[xk] : -1;
        const int committed = ctx.topo ? commit_fx[cx] : -1;

        auto& cands = cand_f[depth];
        cands.clear();
        for (int y0 = 0; y0 < ctx.ny; ++y0) {
            double floor_add = 0.0;
            if (ctx.topo) {
                const int cy = ctx.topo->comp_y[y0];
                if (committed != -1) {
                    if (cy != committed)
                        continue;
                } else {
                    const double gap = ctx.topo->comp_diam_x[cx] - ctx.topo->comp_diam_y[cy];
                    if (gap > 0.0)
                        floor_add = gap;
                }
                bool ok = true;
                for (int xj : ctx.topo->nbr_x[xk]) {
                    const int fy = f[xj];
                    if (fy != -1 && fy != y0 &&
                        !ctx.topo->adj_y[static_cast<size_t>(y0) * ctx.ny + fy]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
            }
            double cost = 0.0;
            for (int xj : assigned_x)
                cost = std::max(cost, std::abs(ctx.x.dist(xk, xj) - ctx.y.dist(y0, f[xj])));
            if (std::max({terms, cost, floor_lb, floor_add}) >= best)
                continue;
            cands.push_back({cost, y0, floor_add});
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            return a.cost != b.cost ? a.cost < b.cost : a.value < b.value;
        });

        int position = 0;
        for (const Candidate& c : cands) {
            if (done || exhausted)
                return;
            if (depth == 0 && (position++ % slice_step) != slice_offset)
                continue;
            if (!spend_node())
                return;
            const double new_terms = std::max(terms, c.cost);
            const double new_floor = std::max(floor_lb, c.floor_add);
            if (std::max(new_terms, new_floor) >= best)
                continue;
            f[xk] = c.value;
            assigned_x.push_back(xk);
            const bool fresh_commit = ctx.topo && commit_fx[cx] == -1;
            if (fresh_commit)
                commit_fx[cx] = ctx.topo->comp_y[c.value];
            dfs_f(depth + 1, new_terms, new_floor);
            if (fresh_commit)
                commit_fx[cx] = -1;
            assigned_x.pop_back();
            f[xk] = -1;
        }
    }

    void dfs_g(int depth, double terms, double floor_lb) {
        if (done || exhausted)
            return;
        if (depth == ctx.ny) {
            if (terms < best) {
                best = terms;
                best_f = f;
                best_g = g;
                if (best <= ctx.dis_lower + ctx.tolerance)
                    done = true;
            }
            return;
        }

        const int yk = ctx.order_g[depth];
        const int cy = ctx.topo ? ctx.topo->comp_y[yk] : -1;
        const int committed = ctx.topo ? commit_gy[cy] : -1;

        auto& cands = cand_g[depth];
        cands.clear();
        for (int x0 = 0; x0 < ctx.nx; ++x0) {
            double floor_add = 0.0;
            if (ctx.topo) {
                const int cx2 = ctx.topo->comp_x[x0];
                if (committed != -1) {
                    if (cx2 != committed)
                        continue;
                } else {
                    const double gap = ctx.topo->comp_diam_y[cy] - ctx.topo->comp_diam_x[cx2];
                    if (gap > 0.0)
                        floor_add = gap;
                }
                bool ok = true;
                for (int yj : ctx.topo->nbr_y[yk]) {
                    const int gx = g[yj];
                    if (gx != -1 && gx != x0 &&
                        !ctx.topo->adj_x[static_cast<size_t>(x0) * ctx.nx + gx]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
            }
            double cost = 0.0;
            for (int yj : assigned_y)
                cost = std::max(cost, std::abs(ctx.y.dist(yk, yj) - ctx.x.dist(x0, g[yj])));
            for (int xp = 0; xp < ctx.nx; ++xp)
                cost = std::max(cost, std::abs(ctx.x.dist(xp, x0) - ctx.y.dist(f[xp], yk)));
            if (std::max({terms, cost, floor_lb, floor_add}) >= best)
                continue;
            cands.push_back({cost, x0, floor_add});
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            return a.cost != b.cost ? a.cost < b.cost : a.value < b.value;
        });

        for (const Candidate& c : cands) {
            if (done || exhausted)
                return;
            if (!spend_node())
                return;
            const double new_terms = std::max(terms, c.cost);
            const double new_floor = std::max(floor_lb, c.floor_add);
            if (std::max(new_terms, new_floor) >= best)
                continue;
            g[yk] = c.value;
            assigned_y.push_back(yk);
            const bool fresh_commit = ctx.topo && commit_gy[cy] == -1;
            if (fresh_commit)
                commit_gy[cy] = ctx.topo->comp_x[c.value];
            dfs_g(depth + 1, new_terms, new_floor);
            if (fresh_commit)
                commit_gy[cy] = -1;
            assigned_y.pop_back();
            g[yk] = -1;
        }
    }
};

// Phase 2: rebuild the lexicographically smallest pair whose distortion does
// not exceed the phase-1 value. Positions and candidate values run in plain
// index order, so the first complete assignment found is the smallest one.
struct Canonical {
    const Ctx& ctx;
    double limit;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    double found_dis = 0.0;
    std::vector<int> f, g;
    std::vector<int> commit_fx, commit_gy;

    Canonical(const Ctx& c, double limit_, std::uint64_t budget_limit)
        : ctx(c), limit(limit_), budget(budget_limit), f(c.nx, -1), g(c.ny, -1) {
        if (ctx.topo) {
            commit_fx.assign(ctx.topo->comp_diam_x.size(), -1);
            commit_gy.assign(ctx.topo->comp_diam_y.size(), -1);
        }
    }

    bool spend_node() {
        if (nodes >= budget) {
            exhausted = true;
            return false;
        }
        ++nodes;
        return true;
    }

    bool dfs_f(int xk, double terms) {
        if (xk == ctx.nx) {
            if (image_cover_floor(ctx, f, std::nextafter(limit, kInf)) > limit)
                return false;
            return dfs_g(0, terms);
        }
        const int cx = ctx.topo ? ctx.topo->comp_x[xk] : -1;
        const int committed = ctx.topo ? commit_fx[cx] : -1;
        for (int y0 = 0; y0 < ctx.ny; ++y0) {
            if (exhausted)
                return false;
            if (ctx.topo) {
                const int cy = ctx.topo->comp_y[y0];
                if (committed != -1) {
                    if (cy != committed)
                        continue;
                } else if (ctx.topo->comp_diam_x[cx] - ctx.topo->comp_diam_y[cy] > limit) {
                    continue;
                }
                bool ok = true;
                for (int xj : ctx.topo->nbr_x[xk]) {
                    const int fy = f[xj];
                    if (fy != -1 && fy != y0 &&
                        !ctx.topo->adj_y[static_cast<size_t>(y0) * ctx.ny + fy]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
            }
            double cost = 0.0;
            for (int xj = 0; xj < xk; ++xj)
                cost = std::max(cost, std::abs(ctx.x.dist(xk, xj) - ctx.y.dist(y0, f[xj])));
            if (std::max(terms, cost) > limit)
                continue;
            if (!spend_node())
                return false;
            f[xk] = y0;
            const bool fresh_commit = ctx.topo && commit_fx[cx] == -1;
            if (fresh_commit)
                commit_fx[cx] = ctx.topo->comp_y[y0];
            if (dfs_f(xk + 1, std::max(terms, cost)))
                return true;
            if (fresh_commit)
                commit_fx[cx] = -1;
            f[xk] = -1;
        }
        return false;
    }

    bool dfs_g(int yk, double terms) {
        if (yk == ctx.ny) {
            found_dis = terms;
            return true;
        }
        const int cy = ctx.topo ? ctx.topo->comp_y[yk] : -1;
        const int committed = ctx.topo ? commit_gy[cy] : -1;
        for (int x0 = 0; x0 < ctx.nx; ++x0) {
            if (exhausted)
                return false;
            if (ctx.topo) {
                const int cx2 = ctx.topo->comp_x[x0];
                if (committed != -1) {
                    if (cx2 != committed)
                        continue;
                } else if (ctx.topo->comp_diam_y[cy] - ctx.topo->comp_diam_x[cx2] > limit) {
                    continue;
                }
                bool ok = true;
                for (int yj : ctx.topo->nbr_y[yk]) {
                    const int gx = g[yj];
                    if (gx != -1 && gx != x0 &&
                        !ctx.topo->adj_x[static_cast<size_t>(x0) * ctx.nx + gx]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
            }
            double cost = 0.0;
            for (int yj = 0; yj < yk; ++yj)
                cost = std::max(cost, std::abs(ctx.y.dist(yk, yj) - ctx.x.dist(x0, g[yj])));
            for (int xp = 0; xp < ctx.nx && std::max(terms, cost) <= limit; ++xp)
                cost = std::max(cost, std::abs(ctx.x.dist(xp, x0) - ctx.y.dist(f[xp], yk)));
            if (std::max(terms, cost) > limit)
                continue;
            if (!spend_node())
                return false;
            g[yk] = x0;
            const bool fresh_commit = ctx.topo && commit_gy[cy] == -1;
            if (fresh_commit)
                commit_gy[cy] = ctx.topo->comp_x[x0];
            if (dfs_g(yk + 1, std::max(terms, cost)))
                return true;
            if (fresh_commit)
                commit_gy[cy] = -1;
            g[yk] = -1;
        }
        return false;
    }
};

} // namespace

PairSearchOutcome minimize_pair_distortion(const PairSearchRequest& req) {
    const FiniteMetricSpace& x = *req.x;
    const FiniteMetricSpace& y = *req.y;
    Ctx ctx{x,
            y,
            req.topology,
            x.size(),
            y.size(),
            by_decreasing_eccentricity(x),
            by_decreasing_eccentricity(y),
            req.dis_lower,
            req.tolerance};

    // Fallback incumbent: constant maps onto the most central points. Always
    // edge-respecting, so even a zero budget yields a valid certificate.
    std::vector<int> best_f(ctx.nx, central_index(y));
    std::vector<int> best_g(ctx.ny, central_index(x));
    double best = evaluate_pair(best_f, best_g, x, y);

    if (req.seed) {
        const MapPair& seed = *req.seed;
        if (static_cast<int>(seed.f.size()) != ctx.nx ||
            static_cast<int>(seed.g.size()) != ctx.ny)
            throw DomainError(DomainError::Code::SizeMismatch,
                              "seed pair does not match the space sizes");
        for (int v : seed.f)
            if (v < 0 || v >= ctx.ny)
                throw DomainError(DomainError::Code::OutOfRange, "seed f value out of range");
        for (int v : seed.g)
            if (v < 0 || v >= ctx.nx)
                throw DomainError(DomainError::Code::OutOfRange, "seed g value out of range");
        if (ctx.topo &&
            (!edge_respecting(seed.f, ctx.topo->adj_x, ctx.topo->adj_y, ctx.nx, ctx.ny) ||
             !edge_respecting(seed.g, ctx.topo->adj_y, ctx.topo->adj_x, ctx.ny, ctx.nx)))
            throw DomainError(DomainError::Code::BadParameters,
                              "seed pair is not edge-respecting");
        const double seed_dis = evaluate_pair(seed.f, seed.g, x, y);
        if (seed_dis <= best) {
            best = seed_dis;
            best_f = seed.f;
            best_g = seed.g;
        }
    }

    PairSearchOutcome out;
    bool bound_matched = best <= ctx.dis_lower + ctx.tolerance;
    bool phase1_exhausted = false;

    if (!bound_matched) {
        const int threads = std::max(1, std::min(req.threads, ctx.ny));
        if (threads == 1) {
            Worker w(ctx, best, best_f, best_g, req.budget, 0, 1);
            w.run();
            out.nodes += w.nodes;
            phase1_exhausted = w.exhausted;
            bound_matched = w.done;
            if (w.best < best) {
                best = w.best;
                best_f = w.best_f;
                best_g = w.best_g;
            }
        } else {
            const std::uint64_t share =
                req.budget == kNoBudget ? kNoBudget : req.budget / threads;
            std::vector<std::unique_ptr<Worker>> workers;
            workers.reserve(threads);
            for (int t = 0; t < threads; ++t)
                workers.push_back(
                    std::make_unique<Worker>(ctx, best, best_f, best_g, share, t, threads));
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (auto& w : workers)
                pool.emplace_back([&w] { w->run(); });
            for (auto& th : pool)
                th.join();
            for (auto& w : workers) {
                out.nodes += w->nodes;
                phase1_exhausted = phase1_exhausted || w->exhausted;
                bound_matched = bound_matched || w->done;
                if (w->best < best) {
                    best = w->best;
                    best_f = w->best_f;
                    best_g = w->best_g;
                }
            }
        }
    }

    out.proven_optimal = bound_matched || !phase1_exhausted;
    out.budget_exhausted = phase1_exhausted && !bound_matched;
    out.conclusion = bound_matched         ? "matched lower bound"
                     : out.proven_optimal  ? "search exhausted"
                                           : "node budget exhausted";

    // Canonicalize the certificate: smallest (f, g) reaching the value found.
    const std::uint64_t remaining =
        req.budget == kNoBudget
            ? kNoBudget
            : (req.budget > out.nodes ? req.budget - out.nodes : 0);
    Canonical canon(ctx, best, remaining);
    if (canon.dfs_f(0, 0.0)) {
        best = canon.found_dis;
        best_f = canon.f;
        best_g = canon.g;
    } else if (canon.exhausted) {
        out.budget_exhausted = true;
    }
    out.nodes += canon.nodes;

    out.dis = best;
    out.best = MapPair{std::move(best_f), std::move(best_g)};
    return out;
}

} // namespace ghdist::detail
