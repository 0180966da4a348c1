#pragma once

#include <vector>

#include "cacti/graded/fp_matrix.hpp"
#include "cacti/cyclic/finite_algebra.hpp"

namespace cacti::cyclic {

// Cyclic bar complex of a finite algebra: level k has basis the
// (k+1)-tuples of algebra basis elements.
class CyclicNerve {
public:
    CyclicNerve(const FiniteAlgebra& algebra, int k_max);

    int k_max() const { return k_max_; }
    int level_dim(int k) const;
    int tuple_index(const std::vector<int>& tuple) const;
    std::vector<int> tuple_of(int level, int index) const;

    // face/degeneracy/cyclic operator as matrices between levels
    graded::FpMatrix face(int level, int i) const;        // level -> level-1
    graded::FpMatrix degeneracy(int level, int i) const;  // level -> level+1
    graded::FpMatrix cyclic_op(int level) const;

    graded::FpMatrix boundary(int level) const;  // alternating sum of faces

private:
    const FiniteAlgebra& a_;
    int k_max_;
};

// Hochschild homology dimensions HH_0..HH_{n_max}
std::vector<int> hh_dims(const FiniteAlgebra& algebra, int n_max);

// ---- set-level cyclic nerve of a finite monoid, and its subdivisions ----

using Tuple = std::vector<int>;

Tuple monoid_face(const FiniteMonoid& m, int i, const Tuple& t);
Tuple monoid_degeneracy(const FiniteMonoid& m, int i, const Tuple& t);
Tuple monoid_cyclic(const Tuple& t);

// r-fold edgewise subdivision: level k is nerve level r(k+1)-1
Tuple sd_face(const FiniteMonoid& m, int r, int level, int i, const Tuple& t);
Tuple sd_degeneracy(const FiniteMonoid& m, int r, int level, int i, const Tuple& t);
Tuple sd_rotation(int r, int level, const Tuple& t);  // the Z/r generator

struct FixedPointReport {
    bool ok = true;
    std::string detail;
};

// Z/p-fixed simplices of sd_p(nerve) are the p-fold diagonals, and the
// diagonal identifies the fixed-point simplicial object with the nerve.
FixedPointReport fixed_points_check(const FiniteMonoid& m, int p, int max_level);

// sd_{mn} restricted along Z/m agrees with sd_m of sd_n, levelwise
FixedPointReport restriction_compat_check(const FiniteMonoid& m, int r1, int r2, int max_level);

}  // namespace cacti::cyclic
