#pragma once

#include <vector>

#include "cacti/graded/fp_matrix.hpp"
#include "cacti/graded/group.hpp"
#include "cacti/steenrod/milnor.hpp"

namespace cacti::steenrod {

// Left/right multiplication by the Bockstein Q0 on A^* (the dual of the
// Milnor basis), as matrices per cohomological degree. left[n] and
// right[n] map A^n -> A^{n+1}, available for 0 <= n <= N-1.
struct BocksteinTables {
    int p = 2;
    int N = 0;
    std::vector<graded::FpMatrix> left, right;

    const graded::FpMatrix& matrix(bool left_side, int n) const {
        return left_side ? left.at(n) : right.at(n);
    }
};

BocksteinTables bockstein_ops(const MilnorAlgebra& milnor);

struct ExactnessRow {
    int degree;
    int dim_kernel;
    int dim_image_from_below;
    bool exact;
};

// ker(Q0 at degree n) vs im(Q0 from degree n-1), both sides; degree 0
// included (kernel there is 0 since Q0(1) = Q0).
std::vector<ExactnessRow> verify_q0_exact(const MilnorAlgebra& milnor,
                                          const BocksteinTables& tables, bool left_side,
                                          int n_max);

// B^n = A^n / (A Q0)^n, with chosen monomial representatives and the
// induced left-Q0 differential on representatives.
struct BQuotient {
    int p = 2;
    int N = 0;
    std::vector<std::vector<int>> rep_indices;       // per degree: indices into the Milnor basis
    std::vector<graded::FpMatrix> induced_q0;        // B^n -> B^{n+1}, n = 0..N-1
    int dim(int n) const {
        return (n < 0 || n >= static_cast<int>(rep_indices.size()))
                   ? 0
                   : static_cast<int>(rep_indices[n].size());
    }
};

BQuotient b_quotient(const MilnorAlgebra& milnor, const BocksteinTables& tables);

// P^n = im(Q0: B^{n-1} -> B^n); construction checks that the homology of
// (B, Q0) is one copy of F_p in degree 0.
struct PStar {
    int p = 2;
    int N = 0;
    std::vector<int> dims;  // P^n for n = 0..N
    int dim(int n) const {
        return (n < 0 || n > N) ? 0 : dims[n];
    }
};

PStar p_star(const MilnorAlgebra& milnor, const BQuotient& b);

}  // namespace cacti::steenrod
