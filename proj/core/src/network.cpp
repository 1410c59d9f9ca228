#include "iamod/network.hpp"

#include <algorithm>
#include <cstddef>

namespace iamod {

double DriveCycle::energy_per_meter(double speed) const {
    if (points.empty()) throw InvalidParameter("drive cycle: no breakpoints");
    if (speed <= points.front().speed) return points.front().energy_per_meter;
    if (speed >= points.back().speed) return points.back().energy_per_meter;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (speed <= points[i].speed) {
            const auto& lo = points[i - 1];
            const auto& hi = points[i];
            const double s = (speed - lo.speed) / (hi.speed - lo.speed);
            return lo.energy_per_meter + s * (hi.energy_per_meter - lo.energy_per_meter);
        }
    }
    return points.back().energy_per_meter;
}

MultilayerGraph prune_road_arcs(const MultilayerGraph& g, double av_speed, double fraction) {
    MultilayerGraph out;
    out.nodes = g.nodes;
    out.arcs.reserve(g.arcs.size());
    for (const auto& arc : g.arcs) {
        if (arc.kind == ArcKind::Road && av_speed < fraction * arc.speed_limit) continue;
        out.arcs.push_back(arc);
    }
    return out;
}

double arc_travel_time(const Arc& arc, double av_speed, double frequency,
                       const ScenarioParams& params) {
    switch (arc.kind) {
        case ArcKind::Road:
            return arc.length / std::min(av_speed, arc.speed_limit);
        case ArcKind::Walk:
            return arc.length / params.walking_speed;
        case ArcKind::TransitLine:
            return arc.scheduled_time;
        case ArcKind::WalkToStation:
            if (frequency <= 0.0)
                throw InvalidParameter("station frequency must be positive");
            return params.time_walk_to_station + 0.5 / frequency;
        case ArcKind::StationToWalk:
            return params.time_station_to_walk;
        case ArcKind::WalkToRoad:
            return params.time_walk_to_road;
        case ArcKind::RoadToWalk:
            return params.time_road_to_walk;
    }
    throw InvalidParameter("unknown arc kind");
}

double arc_energy(const Arc& arc, double av_speed, const DriveCycle& cycle) {
    if (arc.kind != ArcKind::Road)
        throw std::invalid_argument("arc_energy: not a road arc");
    if (arc.length == 0.0) return 0.0;
    const double speed = std::min(av_speed, arc.speed_limit);
    return cycle.energy_per_meter(speed) * arc.length;
}

std::vector<double> scaled_station_frequencies(const MultilayerGraph& g, double train_factor) {
    std::vector<double> freq(g.arcs.size(), 0.0);
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        if (g.arcs[i].kind == ArcKind::WalkToStation)
            freq[i] = train_factor * g.arcs[i].baseline_frequency;
    }
    return freq;
}

namespace {

// Reachability of every node from `start` along the given orientation.
bool all_reachable(const MultilayerGraph& g, bool forward) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& arc : g.arcs) {
        if (forward)
            adj[static_cast<std::size_t>(arc.from)].push_back(arc.to);
        else
            adj[static_cast<std::size_t>(arc.to)].push_back(arc.from);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

}  // namespace

bool is_strongly_connected(const MultilayerGraph& g) {
    if (g.nodes.empty()) return true;
    return all_reachable(g, true) && all_reachable(g, false);
}

}  // namespace iamod
