#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cacti::steenrod {

// Monomial in the dual Steenrod algebra A_*.
// p = 2: xi[i] = exponent of xi_{i+1}, deg xi_i = 2^i - 1, no taus.
// p odd: deg xi_i = 2(p^i - 1); tau[i] marks tau_i, deg tau_i = 2 p^i - 1.
struct MilnorMonomial {
    std::vector<int> xi;
    std::vector<char> tau;
    friend auto operator<=>(const MilnorMonomial&, const MilnorMonomial&) = default;
};

using TensorElt = std::map<std::pair<MilnorMonomial, MilnorMonomial>, int>;

// Degree-truncated dual Steenrod algebra with Milnor monomial basis.
// Degrees here are internal (cohomological) degrees 0..N.
class MilnorAlgebra {
public:
    MilnorAlgebra(int p, int N);

    int prime() const { return p_; }
    int truncation() const { return N_; }
    int xi_count() const { return static_cast<int>(xi_degrees_.size()); }
    int tau_count() const { return static_cast<int>(tau_degrees_.size()); }

    const std::vector<MilnorMonomial>& basis(int n) const;  // throws on n > N
    int dim(int n) const;
    int index_of(const MilnorMonomial& m) const;
    int degree_of(const MilnorMonomial& m) const;
    std::string label(const MilnorMonomial& m) const;
    MilnorMonomial unit() const;

    // product in A_* with Koszul sign; coefficient may be 0 (tau^2 = 0)
    std::pair<int, MilnorMonomial> multiply(const MilnorMonomial& a,
                                            const MilnorMonomial& b) const;

    // full coproduct of a basis monomial (multiplicative from generator rules)
    TensorElt coproduct(const MilnorMonomial& m) const;

    // coproduct keeping only terms with the left (resp. right) factor of
    // degree <= cap; this is what the Bockstein pairing needs
    TensorElt coproduct_left_slice(const MilnorMonomial& m, int cap) const;
    TensorElt coproduct_right_slice(const MilnorMonomial& m, int cap) const;

    // the degree-1 primitive used for Q0: tau_0 for odd p, xi_1 for p = 2
    MilnorMonomial degree_one_primitive() const;

private:
    TensorElt generator_coproduct(bool is_tau, int index) const;
    TensorElt tensor_multiply(const TensorElt& a, const TensorElt& b, int left_cap,
                              int right_cap) const;
    TensorElt coproduct_capped(const MilnorMonomial& m, int left_cap, int right_cap) const;

    int p_, N_;
    std::vector<int> xi_degrees_, tau_degrees_;
    std::vector<std::vector<MilnorMonomial>> basis_;  // by degree
    std::map<MilnorMonomial, int> index_;
};

}  // namespace cacti::steenrod
