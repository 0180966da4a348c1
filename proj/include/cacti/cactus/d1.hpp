#pragma once

#include "cacti/cactus/datum.hpp"

namespace cacti::cactus {

// Element of the interval operad: [0,1] cut into labelled subintervals.
struct IntervalPartition {
    std::vector<Rational> cuts;  // 0 = c_0 < ... < c_n = 1
    std::vector<int> labels;     // labels[i] labels [c_i, c_{i+1}], bijection onto 1..n

    int arity() const { return static_cast<int>(labels.size()); }
    friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

IntervalPartition d1_unit();
IntervalPartition d1_make(const std::vector<Rational>& cuts);  // identity labels
bool d1_valid(const IntervalPartition& x);

// affine insertion of inner into the slot-th interval of outer
IntervalPartition d1_compose(const IntervalPartition& outer, int slot,
                             const IntervalPartition& inner);

}  // namespace cacti::cactus
