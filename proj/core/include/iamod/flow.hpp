#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "iamod/lp.hpp"
#include "iamod/network.hpp"

namespace iamod {

// Stage-2 travel-time slack: the mileage minimization may exceed the
// stage-1 optimum by rel * t + abs.
inline constexpr double kTimeTieRel = 1e-9;
inline constexpr double kTimeTieAbs = 1e-9;

struct EmptyDemand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Travel time and AV energy per arc, aligned with the graph's arc list.
/// Energy is zero on non-road arcs.
struct ArcCosts {
    std::vector<double> time;
    std::vector<double> energy;
};

ArcCosts compute_arc_costs(const MultilayerGraph& g, double av_speed,
                           const std::vector<double>& station_frequency,
                           const ScenarioParams& params);

/**
 * The routing LP for one design point.
 *
 * Variables: one flow per (request, arc) pair, then one rebalancing flow
 * per road arc. Equalities: per-request conservation at every node, then
 * vehicle conservation at every road node. Inequalities: residual road
 * capacity per road arc, then the single fleet-size row. The objective
 * is the demand-weighted average travel time.
 */
struct FlowProblem {
    LinearProgram lp;
    std::size_t num_requests = 0;
    std::size_t num_arcs = 0;
    std::vector<std::size_t> road_arcs;  // indices into the graph's arc list
    ArcCosts costs;
    double total_demand = 0.0;

    std::size_t commodity_var(std::size_t request, std::size_t arc) const {
        return request * num_arcs + arc;
    }
    std::size_t rebalancing_var(std::size_t road_arc_pos) const {
        return num_requests * num_arcs + road_arc_pos;
    }
};

FlowProblem assemble_flow_lp(const MultilayerGraph& g,
                             const std::vector<TravelRequest>& requests,
                             const DesignPoint& design, const ScenarioParams& params,
                             const std::vector<double>& station_frequency);

enum class FlowStatus { Optimal, Infeasible };

struct FlowMetrics {
    double avg_travel_time = 0.0;  // s per trip
    double vehicles_used = 0.0;    // concurrently employed AVs
    double distance_rate = 0.0;    // AV meters driven per second
    double emission_rate = 0.0;    // AV kg CO2 per second
};

struct FlowSolution {
    FlowStatus status = FlowStatus::Infeasible;
    std::vector<double> commodity_flows;    // request-major, per arc
    std::vector<double> rebalancing_flows;  // aligned with road_arcs
    std::vector<std::size_t> road_arcs;
    FlowMetrics metrics;
};

/// Evaluate the four flow aggregates from a raw LP solution vector.
FlowMetrics derive_metrics(const FlowProblem& problem, const MultilayerGraph& g,
                           const std::vector<double>& x, const ScenarioParams& params);

/**
 * Route all requests at minimum average travel time, then minimize AV
 * mileage among time-optimal routings (two LPs). The graph must already
 * be pruned for the design's speed and the frequencies scaled for its
 * train factor.
 */
FlowSolution solve_flow(const MultilayerGraph& g, const std::vector<TravelRequest>& requests,
                        const DesignPoint& design, const ScenarioParams& params,
                        const std::vector<double>& station_frequency);

}  // namespace iamod
