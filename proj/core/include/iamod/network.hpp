#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iamod {

enum class NodeLayer { Road, Walk, Transit };

enum class ArcKind {
    Road,           // road segment, AV traffic
    Walk,           // pedestrian pathway
    TransitLine,    // scheduled transit segment
    WalkToRoad,     // board an AV
    RoadToWalk,     // leave an AV
    WalkToStation,  // enter a station (incurs the expected headway wait)
    StationToWalk,  // exit a station
};

struct Node {
    std::string id;
    NodeLayer layer = NodeLayer::Walk;
};

struct Arc {
    int from = -1;
    int to = -1;
    ArcKind kind = ArcKind::Walk;
    double length = 0.0;              // m (road, walk, transit)
    double speed_limit = 0.0;         // m/s, road arcs
    double capacity = 0.0;            // vehicles/s, road arcs
    double baseline_usage = 0.0;      // vehicles/s, road arcs
    double scheduled_time = 0.0;      // s, transit arcs
    double baseline_frequency = 0.0;  // 1/s, walk->station arcs
};

/// Road, walking and transit layers in one digraph, stitched together by
/// mode-switching arcs. Immutable after load; pruning returns a copy.
struct MultilayerGraph {
    std::vector<Node> nodes;
    std::vector<Arc> arcs;
};

/// One origin-destination demand stream. Endpoints are walk-layer nodes.
struct TravelRequest {
    int origin = -1;
    int destination = -1;
    double rate = 0.0;  // customers/s, > 0
};

/**
 * Energy intensity of the AV drive cycle, as J/m over average speed.
 * Piecewise-linear between breakpoints, clamped at the ends.
 */
struct DriveCycle {
    struct Point {
        double speed = 0.0;             // m/s
        double energy_per_meter = 0.0;  // J/m
    };
    std::vector<Point> points;  // speeds strictly increasing, >= 2 entries

    double energy_per_meter(double speed) const;
};

/// One cell of the design grid.
struct DesignPoint {
    double av_speed = 0.0;        // m/s, achievable AV speed
    std::int64_t fleet_size = 0;  // AVs acquired
    double train_factor = 1.0;    // subway fleet/frequency multiplier, >= 1

    bool operator==(const DesignPoint&) const = default;
};

struct ScenarioParams {
    double speed_limit_fraction = 0.0;  // arc kept iff av_speed >= fraction * limit
    double walking_speed = 0.0;         // m/s
    double time_walk_to_road = 0.0;     // s, includes the expected AV pickup wait
    double time_road_to_walk = 0.0;     // s
    double time_walk_to_station = 0.0;  // s, on top of the headway wait
    double time_station_to_walk = 0.0;  // s
    double co2_per_joule = 0.0;         // kg/J
    DriveCycle drive_cycle;
    double seconds_per_month = 2629800.0;
};

struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Drop road arcs too fast for the vehicle: arc kept iff
 * av_speed >= fraction * speed_limit (boundary kept). Non-road arcs pass
 * through untouched. Losing road connectivity is not an error; requests
 * that depended on the lost arcs surface as infeasible flows instead.
 */
MultilayerGraph prune_road_arcs(const MultilayerGraph& g, double av_speed, double fraction);

/**
 * Time to traverse one arc, in seconds. `frequency` is the effective
 * station frequency and only matters for WalkToStation arcs, where the
 * expected wait of half a headway is added.
 */
double arc_travel_time(const Arc& arc, double av_speed, double frequency,
                       const ScenarioParams& params);

/// AV energy to traverse a road arc, in Joules, at the arc's free-flow speed.
double arc_energy(const Arc& arc, double av_speed, const DriveCycle& cycle);

/// Per-arc station frequencies scaled by the train factor; zero for arcs
/// that are not walk->station switches.
std::vector<double> scaled_station_frequencies(const MultilayerGraph& g, double train_factor);

bool is_strongly_connected(const MultilayerGraph& g);

}  // namespace iamod
