#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iamod/catalog.hpp"
#include "iamod/flow.hpp"
#include "iamod/network.hpp"
#include "iamod/pareto.hpp"

namespace iamod {

/// Finite design menu, one axis per decision. Axes are deduplicated and
/// sorted ascending; cells are enumerated speed-major, then fleet, then
/// train factor.
struct DesignGrid {
    std::vector<double> speeds;             // m/s, must be vehicle-catalog rows
    std::vector<std::int64_t> fleet_sizes;  // number of AVs
    std::vector<double> train_factors;      // must be subway-catalog rows

    std::size_t cells() const {
        return speeds.size() * fleet_sizes.size() * train_factors.size();
    }
};

enum class Classification { Pareto, FeasibleIrrational, Infeasible };

struct EvaluatedPoint {
    DesignPoint design;
    ResourceVector resources;
    Classification classification = Classification::Infeasible;
};

/**
 * Evaluate every grid cell: prune the road network for the cell's speed,
 * scale station frequencies for its train factor, route the demand, and
 * aggregate resources. Output order is the grid's lexicographic cell
 * order and is independent of `threads`. Classification is assigned
 * after the full sweep.
 */
std::vector<EvaluatedPoint> evaluate_grid(const MultilayerGraph& g,
                                          const std::vector<TravelRequest>& requests,
                                          const ScenarioParams& params,
                                          const VehicleCatalog& vcat,
                                          const SubwayCatalog& scat, const DesignGrid& grid,
                                          unsigned threads = 1);

/**
 * The antichain of minimal feasible resources. Labels are indices into
 * `points`, which gets reclassified consistently: feasible points whose
 * resources sit on the front become Pareto, the rest FeasibleIrrational.
 */
Antichain pareto_front(std::vector<EvaluatedPoint>& points);

/**
 * Cheapest way to buy travel time within a budget: among front elements
 * with every resource within the budget, the one with minimal time
 * (ties: minimal cost, then minimal emissions). Empty when nothing fits.
 */
std::optional<LabeledPoint> query_budget(const Antichain& front, const ResourceVector& budget);

/// Monetized (cost, time) front derived from a 3D front; a subset of the
/// monetized image, labels preserved.
Antichain monetized_front(const Antichain& front, double rate);

/// One named monetized front, aligned for side-by-side comparison.
struct FrontSeries {
    std::string name;
    std::vector<LabeledPoint> points;  // sorted by cost ascending
};

std::vector<FrontSeries> compare_fronts(const std::vector<FrontSeries>& fronts);

}  // namespace iamod
