#pragma once

#include <map>
#include <utility>

#include "cacti/graded/algebra.hpp"

namespace cacti::graded {

// Bigraded F_p dimensions, keyed by (homological s, internal t).
struct Bigraded {
    std::map<std::pair<int, int>, int> dims;
    int dim(int s, int t) const {
        auto it = dims.find({s, t});
        return it == dims.end() ? 0 : it->second;
    }
    friend bool operator==(const Bigraded&, const Bigraded&) = default;
};

// Tor_A(F_p, F_p) via the reduced bar complex, for an augmented graded
// F_p-algebra whose augmentation ideal sits in strictly positive (or
// strictly negative) degrees. Internal degrees t with |t| <= t_max,
// homological degrees s <= s_max.
Bigraded bar_tor(const PresentedAlgebra& algebra, int s_max, int t_max);

// Ext_A(F_p, F_p) via the dualized bar complex.
Bigraded cobar_ext(const PresentedAlgebra& algebra, int s_max, int t_max);

}  // namespace cacti::graded
