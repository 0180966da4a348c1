#pragma once

#include <vector>

#include "cacti/cyclic/finite_algebra.hpp"

namespace cacti::cyclic {

// Hochschild cochain: a multilinear map A^{(x) m} -> A, tabulated on basis
// tuples. degree 0 cochains are elements of A.
struct Cochain {
    int degree = 0;
    std::vector<std::vector<int>> table;  // dim^degree rows, each an A-vector
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

class HochschildCochains {
public:
    HochschildCochains(const FiniteAlgebra& algebra, int n_max);

    const FiniteAlgebra& algebra() const { return a_; }
    int n_max() const { return n_max_; }

    Cochain zero(int degree) const;
    Cochain basis_cochain(int degree, int input_tuple, int output) const;
    int cochain_dim(int degree) const;
    std::vector<Cochain> basis(int degree) const;

    bool is_zero(const Cochain& f) const;
    Cochain add(const Cochain& f, const Cochain& g, int sign_g = 1) const;
    Cochain scale(const Cochain& f, int c) const;

    Cochain differential(const Cochain& f) const;
    Cochain cup(const Cochain& f, const Cochain& g) const;
    Cochain circ_at(const Cochain& f, int i, const Cochain& g) const;  // 1-based slot
    Cochain brace(const Cochain& f, const std::vector<Cochain>& gs) const;
    Cochain bracket(const Cochain& f, const Cochain& g) const;

    // multiplication 2-cochain and identity 1-cochain
    Cochain multiplication() const;
    Cochain identity_cochain() const;

    // kernel of d: C^0 -> C^1, i.e. the center of A
    std::vector<std::vector<int>> center() const;

private:
    const FiniteAlgebra& a_;
    int n_max_;
    int pow_dim(int e) const;
    std::vector<int> tuple_of(int degree, int index) const;
    int index_of(const std::vector<int>& tuple) const;
    // evaluate f on a basis tuple with one slot replaced by a vector
    std::vector<int> eval_slot(const Cochain& f, const std::vector<int>& tuple, int slot,
                               const std::vector<int>& vec) const;
};

}  // namespace cacti::cyclic
