#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "iamod/flow.hpp"
#include "iamod/network.hpp"
#include "iamod/pareto.hpp"

namespace iamod {

struct UnknownDesign : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Vehicle price list, one row per achievable speed. Fixed cost is the
 * base vehicle plus its automation package; the operational cost is per
 * meter driven. Both must be non-decreasing in speed (validated at load).
 */
struct VehicleCatalog {
    struct Row {
        double speed = 0.0;             // m/s
        double vehicle_cost = 0.0;      // USD per vehicle
        double automation_cost = 0.0;   // USD per vehicle
        double operational_cost = 0.0;  // USD per meter

        double fixed_cost() const { return vehicle_cost + automation_cost; }
    };
    std::vector<Row> rows;  // sorted by speed, unique
    double life_years = 0.0;
};

struct VehicleCosts {
    double fixed_cost = 0.0;        // USD per vehicle
    double operational_cost = 0.0;  // USD per meter
};

/// Exact catalog lookup; speeds between rows are not interpolated.
VehicleCosts vehicle_costs(const VehicleCatalog& cat, double speed);

/**
 * Subway price list over the train-factor menu. Operational cost is
 * mileage-independent and varies only with the fleet multiplier.
 */
struct SubwayCatalog {
    struct Row {
        double factor = 1.0;
        double operational_cost = 0.0;  // USD per year
    };
    std::int64_t baseline_fleet = 0;
    double train_cost = 0.0;          // USD per train acquired
    double train_life_years = 0.0;
    double co2_per_train_year = 0.0;  // kg per train per year
    std::vector<Row> rows;            // sorted by factor, unique
};

struct SubwayCosts {
    std::int64_t fleet_size = 0;         // trains operated
    std::int64_t acquired = 0;           // trains bought beyond the baseline
    double acquisition_per_year = 0.0;   // amortized, USD/year
    double operational_per_year = 0.0;   // USD/year
};

/// Fleet sizing and costs for one train factor. The operated fleet is the
/// baseline scaled by the factor, rounded half-up to whole trains.
SubwayCosts subway_costs(const SubwayCatalog& cat, double train_factor);

/**
 * Fold one design point's flow outcome into the (cost, time, emissions)
 * resource vector, in USD/month, seconds, kg/month. Infeasible flows map
 * to the top element.
 */
ResourceVector aggregate_resources(const FlowSolution& flow, const DesignPoint& design,
                                   const VehicleCatalog& vcat, const SubwayCatalog& scat,
                                   const ScenarioParams& params);

/**
 * Price emissions into cost at `rate` USD/kg, dropping to a
 * (cost, time) view. Dominance in 3D is preserved in 2D. Top maps to top.
 */
ResourceVector monetize(const ResourceVector& r, double rate);

}  // namespace iamod
