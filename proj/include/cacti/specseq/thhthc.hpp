#pragma once

#include <vector>

#include "cacti/graded/group.hpp"
#include "cacti/steenrod/bockstein.hpp"
#include "cacti/steenrod/models.hpp"

namespace cacti::specseq {

// Truncation box shared by the smash-power pipelines and the closed forms
// they are compared against. All comparisons are at matched boxes.
struct ThhThcBox {
    int lo = -10, hi = 10;  // reported degree window
    int y_cap = 0;          // sigma/y powers 0..y_cap
    int gamma_cap = 0;      // divided-power indices 0..gamma_cap
    int e_cap = 0;          // Borel classes e_0..e_cap (= 2 y_cap)
    int milnor_n = 0;       // internal Steenrod truncation

    static ThhThcBox for_window(int lo, int hi);
    int internal_lo() const { return lo - 6; }
    int internal_hi() const { return hi + 6; }
};

// non-equivariant coefficients: F_p[sigma] (x) Gamma(rho) (x) A^*, as
// boxed dimensions, cross-checked against a convolution count
graded::GradedVectorSpace thhthc_nonequivariant(const steenrod::MilnorAlgebra& milnor,
                                                const ThhThcBox& box);

// Borel homology of the smash-power construction, assembled from the
// three-stage cascade run with the genuine Bockstein matrices.
struct BorelTHHTHC {
    int p = 2, r = 2;
    ThhThcBox box;

    struct GammaClass {  // sigma^j gamma_i . (B-class m, idx) . e_k, i >= 1, k in {0,1}
        int j, i, k, m, idx;
        int degree() const { return 2 * j - 2 * i - m + k; }
    };
    struct EClass {  // P{e_k} (suspended=false) or P[1]{e_k} classes
        bool suspended;
        int k, m, idx;  // m = cohomological degree of the underlying P class
        int degree() const { return suspended ? -(m - 1) + k : -m + k; }
    };
    std::vector<GammaClass> gamma_part;
    std::vector<EClass> e_part;
    graded::GradedGroup cyclic_part{2};

    graded::GradedGroup total() const;
};

BorelTHHTHC run_thhthc_borel(int p, int r, const ThhThcBox& box,
                             const steenrod::MilnorAlgebra& milnor,
                             const steenrod::BocksteinTables& tables);

// two-path check: each cascade summand against its closed-form dimensions,
// and the cyclic part against the THH Borel table; throws naming the stage
void audit_borel_closed_forms(const BorelTHHTHC& borel, const steenrod::MilnorAlgebra& milnor,
                              const steenrod::BocksteinTables& tables);

// fixed-point coefficients, carried with full summand labels so the
// restriction-map tower can be formed
struct ThhThcFixed {
    int p = 2, r = 1;
    ThhThcBox box;
    struct C {
        int gamma, ypow;
        steenrod::ModelClass mc;  // degree stored absolutely (shift applied)
    };
    std::vector<C> classes;
    graded::GradedGroup group(int lo, int hi) const;
};

ThhThcFixed thhthc_fixed_points(int p, int r, const ThhThcBox& box,
                                const steenrod::MilnorAlgebra& milnor,
                                const steenrod::BocksteinTables& tables);

graded::GradedGroup tr_thhthc(int p, const ThhThcBox& box, int cutoff,
                              const steenrod::MilnorAlgebra& milnor,
                              const steenrod::BocksteinTables& tables);

// closed forms at the same box, assembled from the Steenrod tables only
graded::GradedGroup et21_closed_form(int p, int r, const ThhThcBox& box,
                                     const steenrod::PStar& pstar);
graded::GradedGroup et22_closed_form(int p, const ThhThcBox& box, const steenrod::PStar& pstar);

}  // namespace cacti::specseq
