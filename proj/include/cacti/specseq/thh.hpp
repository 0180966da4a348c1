#pragma once

#include <vector>

#include "cacti/graded/group.hpp"

namespace cacti::specseq {

enum class BorelVariant { Homology, Cohomology };

// Tate construction coefficients for the smash-power fixed points of
// THH(F_p): E_2 = Z/p[sigma][x, x^{-1}] (x) Lambda(u), one differential
// d^{2r-1} u = x^r sigma^{r-1}, multiplicative extension p = x sigma.
graded::GradedGroup run_tate_thh(int p, int r, int lo, int hi);

// the truncated variants of the same page
graded::GradedGroup run_borel_thh(int p, int r, int lo, int hi,
                                  BorelVariant variant = BorelVariant::Homology);

// cyclic fixed points via the connecting-map induction; the restriction
// map R sends y to p y and the Frobenius F sends y to y
struct FixedPointsTHH {
    int p = 2;
    int r = 1;
    graded::GradedGroup groups{2};
    // R multiplies the degree-2i generator by p^i when passing down one level
    static int r_map_multiplier_exponent(int degree) { return degree / 2; }
};

FixedPointsTHH fixed_points_thh(int p, int r, int lo, int hi);

// degreewise limit over R with Mittag-Leffler stabilization witnessed
graded::GradedGroup tr_thh(int p, int lo, int hi, int cutoff);

}  // namespace cacti::specseq
