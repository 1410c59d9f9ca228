#include "iamod/flow.hpp"

#include <algorithm>
#include <cstddef>

namespace iamod {

ArcCosts compute_arc_costs(const MultilayerGraph& g, double av_speed,
                           const std::vector<double>& station_frequency,
                           const ScenarioParams& params) {
    ArcCosts costs;
    costs.time.resize(g.arcs.size());
    costs.energy.assign(g.arcs.size(), 0.0);
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        const Arc& arc = g.arcs[i];
        costs.time[i] = arc_travel_time(arc, av_speed, station_frequency[i], params);
        if (arc.kind == ArcKind::Road)
            costs.energy[i] = arc_energy(arc, av_speed, params.drive_cycle);
    }
    return costs;
}

FlowProblem assemble_flow_lp(const MultilayerGraph& g,
                             const std::vector<TravelRequest>& requests,
                             const DesignPoint& design, const ScenarioParams& params,
                             const std::vector<double>& station_frequency) {
    if (requests.empty())
        throw EmptyDemand("no travel requests: average travel time is undefined");

    FlowProblem p;
    p.num_requests = requests.size();
    p.num_arcs = g.arcs.size();
    for (std::size_t a = 0; a < g.arcs.size(); ++a)
        if (g.arcs[a].kind == ArcKind::Road) p.road_arcs.push_back(a);
    p.costs = compute_arc_costs(g, design.av_speed, station_frequency, params);
    for (const auto& r : requests) p.total_demand += r.rate;
    if (p.total_demand <= 0.0)
        throw EmptyDemand("total request rate must be positive");

    const std::size_t num_nodes = g.nodes.size();
    const std::size_t num_vars = p.num_requests * p.num_arcs + p.road_arcs.size();

    LinearProgram& lp = p.lp;
    lp.objective.assign(num_vars, 0.0);
    for (std::size_t m = 0; m < p.num_requests; ++m)
        for (std::size_t a = 0; a < p.num_arcs; ++a)
            lp.objective[p.commodity_var(m, a)] = p.costs.time[a] / p.total_demand;

    // Per-request conservation at every node: inflow - outflow equals the
    // node's net demand (negative at the origin, positive at the destination).
    for (std::size_t m = 0; m < p.num_requests; ++m) {
        for (std::size_t j = 0; j < num_nodes; ++j) {
            std::vector<double> row(num_vars, 0.0);
            for (std::size_t a = 0; a < p.num_arcs; ++a) {
                if (g.arcs[a].to == static_cast<int>(j)) row[p.commodity_var(m, a)] += 1.0;
                if (g.arcs[a].from == static_cast<int>(j)) row[p.commodity_var(m, a)] -= 1.0;
            }
            double rhs = 0.0;
            if (requests[m].destination == static_cast<int>(j)) rhs += requests[m].rate;
            if (requests[m].origin == static_cast<int>(j)) rhs -= requests[m].rate;
            lp.eq_lhs.push_back(std::move(row));
            lp.eq_rhs.push_back(rhs);
        }
    }

    // Vehicle conservation at every road node, over road arcs only:
    // customer-carrying and rebalancing vehicles enter and leave in balance.
    for (std::size_t j = 0; j < num_nodes; ++j) {
        if (g.nodes[j].layer != NodeLayer::Road) continue;
        std::vector<double> row(num_vars, 0.0);
        bool touched = false;
        for (std::size_t k = 0; k < p.road_arcs.size(); ++k) {
            const Arc& arc = g.arcs[p.road_arcs[k]];
            double sign = 0.0;
            if (arc.to == static_cast<int>(j)) sign += 1.0;
            if (arc.from == static_cast<int>(j)) sign -= 1.0;
            if (sign == 0.0) continue;
            touched = true;
            row[p.rebalancing_var(k)] += sign;
            for (std::size_t m = 0; m < p.num_requests; ++m)
                row[p.commodity_var(m, p.road_arcs[k])] += sign;
        }
        if (!touched) continue;  // isolated road node after pruning
        lp.eq_lhs.push_back(std::move(row));
        lp.eq_rhs.push_back(0.0);
    }

    // Residual capacity per road arc: total AV flow fits under the
    // threshold left by exogenous traffic.
    for (std::size_t k = 0; k < p.road_arcs.size(); ++k) {
        const Arc& arc = g.arcs[p.road_arcs[k]];
        std::vector<double> row(num_vars, 0.0);
        row[p.rebalancing_var(k)] = 1.0;
        for (std::size_t m = 0; m < p.num_requests; ++m)
            row[p.commodity_var(m, p.road_arcs[k])] = 1.0;
        lp.ub_lhs.push_back(std::move(row));
        lp.ub_rhs.push_back(arc.capacity - arc.baseline_usage);
    }

    // Fleet size: vehicles employed = sum over road arcs of flow * time.
    {
        std::vector<double> row(num_vars, 0.0);
        for (std::size_t k = 0; k < p.road_arcs.size(); ++k) {
            const double t = p.costs.time[p.road_arcs[k]];
            row[p.rebalancing_var(k)] = t;
            for (std::size_t m = 0; m < p.num_requests; ++m)
                row[p.commodity_var(m, p.road_arcs[k])] = t;
        }
        lp.ub_lhs.push_back(std::move(row));
        lp.ub_rhs.push_back(static_cast<double>(design.fleet_size));
    }

    return p;
}

FlowMetrics derive_metrics(const FlowProblem& problem, const MultilayerGraph& g,
                           const std::vector<double>& x, const ScenarioParams& params) {
    FlowMetrics m;
    double time_weighted = 0.0;
    for (std::size_t r = 0; r < problem.num_requests; ++r)
        for (std::size_t a = 0; a < problem.num_arcs; ++a)
            time_weighted += problem.costs.time[a] * x[problem.commodity_var(r, a)];
    m.avg_travel_time = time_weighted / problem.total_demand;

    for (std::size_t k = 0; k < problem.road_arcs.size(); ++k) {
        const std::size_t a = problem.road_arcs[k];
        double total = x[problem.rebalancing_var(k)];
        for (std::size_t r = 0; r < problem.num_requests; ++r)
            total += x[problem.commodity_var(r, a)];
        m.vehicles_used += total * problem.costs.time[a];
        m.distance_rate += total * g.arcs[a].length;
        m.emission_rate += total * problem.costs.energy[a];
    }
    m.emission_rate *= params.co2_per_joule;
    return m;
}

FlowSolution solve_flow(const MultilayerGraph& g, const std::vector<TravelRequest>& requests,
                        const DesignPoint& design, const ScenarioParams& params,
                        const std::vector<double>& station_frequency) {
    FlowProblem problem = assemble_flow_lp(g, requests, design, params, station_frequency);

    FlowSolution sol;
    sol.road_arcs = problem.road_arcs;

    LpSolution stage1 = solve_lp(problem.lp);
    if (stage1.status == LpStatus::Infeasible) {
        sol.status = FlowStatus::Infeasible;
        return sol;
    }
    if (stage1.status != LpStatus::Optimal)
        throw SolverFailure("flow: time objective cannot be unbounded");

    // Stage 2: minimize AV mileage among routings whose average travel
    // time stays at the stage-1 optimum (up to the tie tolerance).
    LinearProgram stage2 = problem.lp;
    stage2.ub_lhs.push_back(problem.lp.objective);
    stage2.ub_rhs.push_back(stage1.objective_value * (1.0 + kTimeTieRel) + kTimeTieAbs);
    stage2.objective.assign(stage2.num_vars(), 0.0);
    for (std::size_t k = 0; k < problem.road_arcs.size(); ++k) {
        const double len = g.arcs[problem.road_arcs[k]].length;
        stage2.objective[problem.rebalancing_var(k)] = len;
        for (std::size_t m = 0; m < problem.num_requests; ++m)
            stage2.objective[problem.commodity_var(m, problem.road_arcs[k])] = len;
    }

    LpSolution stage2sol = solve_lp(stage2);
    if (stage2sol.status != LpStatus::Optimal)
        throw SolverFailure("flow: mileage stage lost feasibility");

    sol.status = FlowStatus::Optimal;
    const auto& x = stage2sol.x;
    sol.commodity_flows.assign(x.begin(),
                               x.begin() + static_cast<std::ptrdiff_t>(problem.num_requests *
                                                                       problem.num_arcs));
    sol.rebalancing_flows.assign(
        x.begin() + static_cast<std::ptrdiff_t>(problem.num_requests * problem.num_arcs),
        x.end());
    sol.metrics = derive_metrics(problem, g, x, params);
    return sol;
}

}  // namespace iamod
