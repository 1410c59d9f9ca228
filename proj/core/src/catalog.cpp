#include "iamod/catalog.hpp"

#include <cmath>
#include <string>

namespace iamod {

namespace {

bool close(double a, double b) {
    return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace

VehicleCosts vehicle_costs(const VehicleCatalog& cat, double speed) {
    for (const auto& row : cat.rows) {
        if (close(row.speed, speed))
            return VehicleCosts{row.fixed_cost(), row.operational_cost};
    }
    throw UnknownDesign("vehicle catalog has no row for speed " + std::to_string(speed) +
                        " m/s");
}

SubwayCosts subway_costs(const SubwayCatalog& cat, double train_factor) {
    for (const auto& row : cat.rows) {
        if (close(row.factor, train_factor)) {
            SubwayCosts out;
            out.fleet_size = static_cast<std::int64_t>(
                std::floor(train_factor * static_cast<double>(cat.baseline_fleet) + 0.5));
            out.acquired = out.fleet_size - cat.baseline_fleet;
            out.acquisition_per_year =
                cat.train_cost * static_cast<double>(out.acquired) / cat.train_life_years;
            out.operational_per_year = row.operational_cost;
            return out;
        }
    }
    throw UnknownDesign("subway catalog has no row for train factor " +
                        std::to_string(train_factor));
}

ResourceVector aggregate_resources(const FlowSolution& flow, const DesignPoint& design,
                                   const VehicleCatalog& vcat, const SubwayCatalog& scat,
                                   const ScenarioParams& params) {
    if (flow.status != FlowStatus::Optimal) return ResourceVector::top();

    const VehicleCosts vc = vehicle_costs(vcat, design.av_speed);
    const SubwayCosts sc = subway_costs(scat, design.train_factor);

    const double yearly_fixed =
        vc.fixed_cost / vcat.life_years * static_cast<double>(design.fleet_size) +
        sc.acquisition_per_year + sc.operational_per_year;
    const double monthly_mileage_cost =
        vc.operational_cost * flow.metrics.distance_rate * params.seconds_per_month;

    ResourceVector r;
    r.cost = yearly_fixed / 12.0 + monthly_mileage_cost;
    r.time = flow.metrics.avg_travel_time;
    r.emissions = flow.metrics.emission_rate * params.seconds_per_month +
                  scat.co2_per_train_year * static_cast<double>(sc.fleet_size) / 12.0;
    return r;
}

ResourceVector monetize(const ResourceVector& r, double rate) {
    if (r.is_top()) return ResourceVector::top();
    return ResourceVector{r.cost + rate * r.emissions, r.time, 0.0};
}

}  // namespace iamod
