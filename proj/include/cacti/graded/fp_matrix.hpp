#pragma once

#include <vector>

namespace cacti::graded {

// Dense matrix over F_p. Rows*cols stay small here (Steenrod tables,
// bar complexes); no sparsity tricks needed.
class FpMatrix {
public:
    FpMatrix(int rows, int cols, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int prime() const { return p_; }

    int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, long long v);

    static FpMatrix identity(int n, int p);
    FpMatrix multiply(const FpMatrix& other) const;
    FpMatrix transpose() const;

    int rank() const;
    FpMatrix inverse() const;  // square, full rank
    // basis of ker as column vectors
    std::vector<std::vector<int>> kernel_basis() const;
    // basis of the column space
    std::vector<std::vector<int>> image_basis() const;
    // indices of standard basis vectors of the codomain completing the
    // column space to the whole space (coset representatives of coker)
    std::vector<int> cokernel_rep_indices() const;

private:
    int rows_, cols_, p_;
    std::vector<int> data_;
};

// Row-reduce (in place) a list of vectors over F_p; returns an echelon
// basis of their span. Used for subquotient bookkeeping.
std::vector<std::vector<int>> echelon_span(std::vector<std::vector<int>> vecs, int p);

// dim of span
int span_rank(const std::vector<std::vector<int>>& vecs, int p);

// Reduce v against echelon basis (pivot = first nonzero, made 1); returns remainder.
std::vector<int> reduce_against(std::vector<int> v, const std::vector<std::vector<int>>& ech, int p);

int mod_inverse(int a, int p);

}  // namespace cacti::graded
