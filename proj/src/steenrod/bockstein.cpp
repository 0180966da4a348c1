#include "cacti/steenrod/bockstein.hpp"

#include <stdexcept>

namespace cacti::steenrod {

using graded::FpMatrix;

BocksteinTables bockstein_ops(const MilnorAlgebra& milnor) {
    int p = milnor.prime(), N = milnor.truncation();
    BocksteinTables out;
    out.p = p;
    out.N = N;
    MilnorMonomial prim = milnor.degree_one_primitive();
    for (int n = 0; n + 1 <= N; ++n) {
        FpMatrix l(milnor.dim(n + 1), milnor.dim(n), p);
        FpMatrix r(milnor.dim(n + 1), milnor.dim(n), p);
        const auto& rows = milnor.basis(n + 1);
        for (int row = 0; row < static_cast<int>(rows.size()); ++row) {
            for (const auto& [pair, coeff] : milnor.coproduct_left_slice(rows[row], 1)) {
                if (pair.first == prim) l.set(row, milnor.index_of(pair.second), coeff);
            }
            for (const auto& [pair, coeff] : milnor.coproduct_right_slice(rows[row], 1)) {
                if (pair.second == prim) r.set(row, milnor.index_of(pair.first), coeff);
            }
        }
        out.left.push_back(std::move(l));
        out.right.push_back(std::move(r));
    }
    return out;
}

std::vector<ExactnessRow> verify_q0_exact(const MilnorAlgebra& milnor,
                                          const BocksteinTables& tables, bool left_side,
                                          int n_max) {
    if (n_max >= tables.N) throw graded::TruncationError("exactness range beyond tables");
    std::vector<ExactnessRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        int ker = milnor.dim(n) - tables.matrix(left_side, n).rank();
        int im = n == 0 ? 0 : tables.matrix(left_side, n - 1).rank();
        rows.push_back({n, ker, im, ker == im});
    }
    return rows;
}

BQuotient b_quotient(const MilnorAlgebra& milnor, const BocksteinTables& tables) {
    int p = milnor.prime(), N = milnor.truncation();
    BQuotient out;
    out.p = p;
    out.N = N;
    out.rep_indices.resize(N + 1);

    // representatives of A^n / im(right Q0)
    std::vector<std::vector<std::vector<int>>> im_echelon(N + 1);
    for (int n = 0; n <= N; ++n) {
        if (n == 0) {
            out.rep_indices[0] = milnor.dim(0) ? std::vector<int>{0} : std::vector<int>{};
            continue;
        }
        const FpMatrix& q = tables.right.at(n - 1);
        out.rep_indices[n] = q.cokernel_rep_indices();
        im_echelon[n] = graded::echelon_span(q.image_basis(), p);
    }

    // induced left Q0 on representatives: apply, then reduce mod the image
    // and re-express in representative coordinates
    for (int n = 0; n + 1 <= N; ++n) {
        const auto& reps_src = out.rep_indices[n];
        const auto& reps_dst = out.rep_indices[n + 1];
        int dim_dst_full = milnor.dim(n + 1);
        FpMatrix m(static_cast<int>(reps_dst.size()), static_cast<int>(reps_src.size()), p);
        // solve full = im_part + rep_part via an invertible change of basis
        int rank_im = static_cast<int>(im_echelon[n + 1].size());
        FpMatrix change(dim_dst_full, dim_dst_full, p);
        for (int c = 0; c < rank_im; ++c)
            for (int rrow = 0; rrow < dim_dst_full; ++rrow)
                change.set(rrow, c, im_echelon[n + 1][c][rrow]);
        for (size_t c = 0; c < reps_dst.size(); ++c) change.set(reps_dst[c], rank_im + static_cast<int>(c), 1);
        if (rank_im + static_cast<int>(reps_dst.size()) != dim_dst_full)
            throw std::logic_error("b_quotient: rep count mismatch");
        FpMatrix inv = dim_dst_full ? change.inverse() : change;

        for (size_t c = 0; c < reps_src.size(); ++c) {
            // image of the representative under left Q0
            std::vector<int> v(dim_dst_full, 0);
            const FpMatrix& q0l = tables.left.at(n);
            for (int rrow = 0; rrow < dim_dst_full; ++rrow) v[rrow] = q0l.at(rrow, reps_src[c]);
            // coordinates in (im | reps) basis
            for (size_t r = 0; r < reps_dst.size(); ++r) {
                long long acc = 0;
                for (int i = 0; i < dim_dst_full; ++i)
                    acc += static_cast<long long>(inv.at(rank_im + static_cast<int>(r), i)) * v[i];
                m.set(static_cast<int>(r), static_cast<int>(c), acc);
            }
        }
        out.induced_q0.push_back(std::move(m));
    }
    return out;
}

PStar p_star(const MilnorAlgebra& milnor, const BQuotient& b) {
    PStar out;
    out.p = b.p;
    out.N = b.N;
    out.dims.assign(b.N + 1, 0);
    for (int n = 1; n <= b.N; ++n) out.dims[n] = b.induced_q0.at(n - 1).rank();
    // homology check: F_p in degree 0, exact elsewhere (within the safe window)
    for (int n = 0; n + 1 <= b.N; ++n) {
        int ker = b.dim(n) - b.induced_q0.at(n).rank();
        int im = out.dim(n);
        int expected = (n == 0) ? 1 : 0;
        if (ker - im != expected)
            throw std::logic_error("p_star: homology of (B, Q0) is not F_p in degree 0 at degree " +
                                   std::to_string(n));
    }
    return out;
}

}  // namespace cacti::steenrod
