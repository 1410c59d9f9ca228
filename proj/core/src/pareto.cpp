#include "iamod/pareto.hpp"

#include <algorithm>
#include <limits>

namespace iamod {

ResourceVector ResourceVector::top() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return ResourceVector{inf, inf, inf};
}

bool ResourceVector::is_top() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return cost == inf && time == inf && emissions == inf;
}

bool leq(const ResourceVector& a, const ResourceVector& b) {
    return a.cost <= b.cost && a.time <= b.time && a.emissions <= b.emissions;
}

bool Antichain::insert(const LabeledPoint& p) {
    if (p.resources.is_top()) return false;
    for (const auto& q : elements_) {
        if (leq(q.resources, p.resources)) return false;
    }
    // p is not dominated; drop everything it strictly dominates. Equal
    // resource vectors were caught above, so leq here means strict.
    std::erase_if(elements_, [&](const LabeledPoint& q) {
        return leq(p.resources, q.resources);
    });
    elements_.push_back(p);
    return true;
}

Antichain minimal_elements(const std::vector<LabeledPoint>& points) {
    Antichain ac;
    for (const auto& p : points) ac.insert(p);
    return ac;
}

}  // namespace iamod
