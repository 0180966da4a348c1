#pragma once

#include <optional>
#include <vector>

#include "cacti/graded/group.hpp"
#include "cacti/steenrod/bockstein.hpp"

namespace cacti::steenrod {

// Summand bookkeeping for the function-spectrum coefficient models.
// component: 0 for the unsuspended wedge summand of the (est3)-style
// splitting, 1 for the desuspended copy. slot: position inside
// F(HZ, HZ/p^k) = HZ/p^k v P v Sigma P.
enum class Slot { Cyclic, P, SigmaP };

struct ModelClass {
    int degree = 0;
    graded::Summand summand;
    int component = 0;
    Slot slot = Slot::Cyclic;
    int p_internal = 0;  // cohomological degree m of the underlying P^m class
    int p_index = 0;

    friend bool operator==(const ModelClass&, const ModelClass&) = default;
};

enum class Which { A, B, P_, FZZ, FZpk, FZ_Zpk };

struct CoeffModel {
    int p = 2;
    int k = 1;
    std::vector<ModelClass> classes;

    graded::GradedGroup group() const;
    CoeffModel shifted(int amount) const;
};

// Named coefficient models on homological degrees [lo, hi].
// A ~ F(HZ/p, HZ/p), B ~ F(HZ, HZ/p), FZZ ~ F(HZ,HZ)^_p,
// FZ_Zpk ~ F(HZ, HZ/p^k), FZpk ~ F(HZ/p^k, HZ/p^k).
CoeffModel coeff_model(Which which, int p, int k, const PStar& pstar, int lo, int hi);

// Lemma-style fiber of the difference-of-Bocksteins map
// F(HZ/p^k, HZ/p^k) -> Sigma F(HZ/p^l, HZ/p^l), computed by the
// prescribed summand matching; equals the F(HZ/p^{k+l}) model.
// zero_map replaces the map by 0 (sanity mode).
CoeffModel lemma_lst_fiber(int p, int k, int l, const PStar& pstar, int lo, int hi,
                           bool zero_map = false);

// Inverse limit of the canonical tower ... -> F(HZ/p^k) -> F(HZ/p^{k-1}),
// degreewise, with Mittag-Leffler stabilization checked; cutoff_k is the
// largest tower level materialized.
graded::GradedGroup tower_limit_est10(int p, const PStar& pstar, int lo, int hi, int cutoff_k);

// limit of one cyclic chain G_{k0},...,G_K with maps multiply-by-p^t
// followed by reduction; exponent 0 means the group vanished at that level
std::optional<graded::Summand> chain_limit(const std::vector<int>& exponents, int mult_power);

}  // namespace cacti::steenrod
