#pragma once

#include <cstddef>
#include <vector>

namespace iamod {

/**
 * One point in the (cost, time, emissions) resource space.
 *
 * Components are monthly cost in USD, average travel time in seconds,
 * and monthly CO2 emissions in kg. All components are finite and
 * non-negative, except for the designated top element (all components
 * +infinity) which stands for an infeasible design.
 */
struct ResourceVector {
    double cost = 0.0;
    double time = 0.0;
    double emissions = 0.0;

    /// The top element: worse than every attainable resource vector.
    static ResourceVector top();

    bool is_top() const;

    bool operator==(const ResourceVector&) const = default;
};

/// Componentwise product order: true iff a[i] <= b[i] for every component.
bool leq(const ResourceVector& a, const ResourceVector& b);

/// Resource vector tagged with the identity of the design that attains it.
struct LabeledPoint {
    ResourceVector resources;
    std::size_t label = 0;
};

/**
 * A set of mutually incomparable resource vectors (Pareto-minimal set).
 *
 * Invariant: for any two distinct elements a, b, neither leq(a, b) nor
 * leq(b, a) holds. Elements keep their insertion order. When a point
 * with resources equal to an existing element is inserted, the earlier
 * label wins.
 */
class Antichain {
public:
    /**
     * Insert p, keeping only minimal elements.
     *
     * If some element is <= p, the antichain is unchanged and false is
     * returned. Otherwise every element strictly dominated by p is
     * removed, p is appended, and true is returned. Top points are
     * never inserted.
     */
    bool insert(const LabeledPoint& p);

    const std::vector<LabeledPoint>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

private:
    std::vector<LabeledPoint> elements_;
};

/**
 * The minimal elements of a point set, in one pass.
 *
 * Equivalent to inserting every point in order into an empty antichain:
 * dominated points are dropped, and among equal resource vectors the
 * first one in `points` keeps its label.
 */
Antichain minimal_elements(const std::vector<LabeledPoint>& points);

}  // namespace iamod
