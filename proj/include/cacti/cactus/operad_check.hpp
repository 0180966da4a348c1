#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cacti/cactus/datum.hpp"

namespace cacti::cactus {

struct OperadReport {
    bool ok = true;
    std::string failure;       // first counterexample, human readable
    int composites_checked = 0;
    int identities_checked = 0;
};

using ComposeFn = std::function<LabelledCactus(const LabelledCactus&, int, const LabelledCactus&)>;

// Property suite over all composites of the seeds up to the given depth:
// closure/validity, Euler characteristic 1, arity additivity, unit laws,
// associativity in both nesting patterns, equivariance under relabeling.
// compose_fn is swappable so the suite can be pointed at a corrupted
// composition to prove it detects one.
OperadReport operad_check(const std::vector<LabelledCactus>& seeds, int depth,
                          const ComposeFn& compose_fn = {});

std::vector<LabelledCactus> standard_seed_library();

}  // namespace cacti::cactus
