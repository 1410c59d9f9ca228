#include "iamod/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace iamod {

namespace {

// Shared per-(speed, factor) context: the pruned graph and the scaled
// station frequencies are identical across the fleet axis.
struct CellContext {
    MultilayerGraph pruned;
    std::vector<double> frequency;
};

}  // namespace

std::vector<EvaluatedPoint> evaluate_grid(const MultilayerGraph& g,
                                          const std::vector<TravelRequest>& requests,
                                          const ScenarioParams& params,
                                          const VehicleCatalog& vcat,
                                          const SubwayCatalog& scat, const DesignGrid& grid,
                                          unsigned threads) {
    const std::size_t ns = grid.speeds.size();
    const std::size_t nf = grid.fleet_sizes.size();
    const std::size_t nt = grid.train_factors.size();
    const std::size_t cells = ns * nf * nt;

    std::vector<CellContext> contexts(ns * nt);
    for (std::size_t si = 0; si < ns; ++si) {
        MultilayerGraph pruned =
            prune_road_arcs(g, grid.speeds[si], params.speed_limit_fraction);
        for (std::size_t ti = 0; ti < nt; ++ti) {
            CellContext& ctx = contexts[si * nt + ti];
            ctx.frequency = scaled_station_frequencies(pruned, grid.train_factors[ti]);
            ctx.pruned = pruned;
        }
    }

    std::vector<EvaluatedPoint> points(cells);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t cell = next.fetch_add(1);
            if (cell >= cells) return;
            const std::size_t si = cell / (nf * nt);
            const std::size_t fi = (cell / nt) % nf;
            const std::size_t ti = cell % nt;
            DesignPoint design{grid.speeds[si], grid.fleet_sizes[fi], grid.train_factors[ti]};
            const CellContext& ctx = contexts[si * nt + ti];
            try {
                FlowSolution flow =
                    solve_flow(ctx.pruned, requests, design, params, ctx.frequency);
                points[cell] = EvaluatedPoint{
                    design, aggregate_resources(flow, design, vcat, scat, params),
                    Classification::Infeasible};
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const unsigned n_threads =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells)));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    pareto_front(points);
    return points;
}

Antichain pareto_front(std::vector<EvaluatedPoint>& points) {
    std::vector<LabeledPoint> feasible;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i].resources.is_top())
            feasible.push_back(LabeledPoint{points[i].resources, i});
    }
    Antichain front = minimal_elements(feasible);

    for (auto& p : points) {
        if (p.resources.is_top()) {
            p.classification = Classification::Infeasible;
            continue;
        }
        p.classification = Classification::FeasibleIrrational;
        for (const auto& e : front.elements()) {
            if (e.resources == p.resources) {
                p.classification = Classification::Pareto;
                break;
            }
        }
    }
    return front;
}

std::optional<LabeledPoint> query_budget(const Antichain& front,
                                         const ResourceVector& budget) {
    std::optional<LabeledPoint> best;
    for (const auto& e : front.elements()) {
        if (!leq(e.resources, budget)) continue;
        if (!best) {
            best = e;
            continue;
        }
        const auto& b = best->resources;
        const auto& r = e.resources;
        if (r.time < b.time || (r.time == b.time && r.cost < b.cost) ||
            (r.time == b.time && r.cost == b.cost && r.emissions < b.emissions)) {
            best = e;
        }
    }
    return best;
}

Antichain monetized_front(const Antichain& front, double rate) {
    std::vector<LabeledPoint> projected;
    projected.reserve(front.size());
    for (const auto& e : front.elements())
        projected.push_back(LabeledPoint{monetize(e.resources, rate), e.label});
    return minimal_elements(projected);
}

std::vector<FrontSeries> compare_fronts(const std::vector<FrontSeries>& fronts) {
    std::vector<FrontSeries> out = fronts;
    for (auto& series : out) {
        std::sort(series.points.begin(), series.points.end(),
                  [](const LabeledPoint& a, const LabeledPoint& b) {
                      if (a.resources.cost != b.resources.cost)
                          return a.resources.cost < b.resources.cost;
                      return a.resources.time < b.resources.time;
                  });
    }
    return out;
}

}  // namespace iamod
