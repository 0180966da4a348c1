#pragma once

#include <string>
#include <vector>

namespace cacti::cyclic {

// Finite-dimensional associative unital F_p-algebra given by structure
// constants: e_i e_j = sum_k c[i][j][k] e_k. Checked on construction.
class FiniteAlgebra {
public:
    FiniteAlgebra(int p, std::vector<std::string> basis_names,
                  std::vector<std::vector<std::vector<int>>> structure, int unit_index);

    int prime() const { return p_; }
    int dim() const { return static_cast<int>(names_.size()); }
    int unit_index() const { return unit_; }
    const std::string& name(int i) const { return names_[i]; }

    // coefficient of e_k in e_i e_j
    int mul(int i, int j, int k) const { return c_[i][j][k]; }

    // product of vectors in basis coordinates
    std::vector<int> multiply(const std::vector<int>& a, const std::vector<int>& b) const;

    static FiniteAlgebra truncated_polynomial(int p, int height);  // F_p[x]/x^height
    static FiniteAlgebra ground_field(int p);
    static FiniteAlgebra monoid_algebra(int p, const std::vector<std::vector<int>>& cayley,
                                        int unit_elt);

    static FiniteAlgebra from_json(int p, const std::string& text);

private:
    int p_, unit_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::vector<int>>> c_;
};

// Finite monoid as a Cayley table (row i, col j = i*j), unit checked.
struct FiniteMonoid {
    std::vector<std::vector<int>> table;
    int unit = 0;
    int size() const { return static_cast<int>(table.size()); }
    bool valid() const;
};

// every associative unital table of the given order (brute force; order <= 4)
std::vector<FiniteMonoid> all_monoids(int order);

}  // namespace cacti::cyclic
