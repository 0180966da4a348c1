#pragma once

#include <cstdint>
#include <vector>

namespace cacti::graded {

// Integer matrix with Smith normal form, used for kernel/cokernel
// computations over Z and Z/p^k. Entries stay tiny in this project;
// int64 with the usual pivoting is plenty.
struct SmithResult {
    std::vector<long long> divisors;        // nonzero elementary divisors d1 | d2 | ...
    std::vector<std::vector<long long>> left;   // U with U*A*V = D
    std::vector<std::vector<long long>> right;  // V
};

class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    long long at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    SmithResult smith() const;

    // cokernel of the map (Z/m)^cols -> (Z/m)^rows given by this matrix,
    // where m = p^k (0 means plain Z): returns the multiset of cyclic orders
    // (p-exponents; 0 encodes a free/full Z/m factor when m = 0 resp. m != 0).
    std::vector<long long> cokernel_orders(long long modulus) const;

private:
    int rows_, cols_;
    std::vector<long long> data_;
};

}  // namespace cacti::graded
