#include "cacti/steenrod/models.hpp"

#include <stdexcept>

namespace cacti::steenrod {

using graded::GradedGroup;
using graded::Summand;

GradedGroup CoeffModel::group() const {
    GradedGroup g(p);
    for (const auto& c : classes) g.add(c.degree, c.summand);
    return g;
}

CoeffModel CoeffModel::shifted(int amount) const {
    CoeffModel out = *this;
    for (auto& c : out.classes) c.degree += amount;
    return out;
}

namespace {

// F(HZ, HZ/p^k)-shaped classes at a given component tag and overall shift
void append_fz_zpk(CoeffModel& model, const PStar& pstar, int k, int component, int shift, int lo,
                   int hi) {
    auto push = [&](ModelClass c) {
        if (c.degree >= lo && c.degree <= hi) model.classes.push_back(c);
    };
    push({shift, Summand::cyclic(k), component, Slot::Cyclic, 0, 0});
    for (int m = 0; m <= pstar.N; ++m) {
        for (int i = 0; i < pstar.dim(m); ++i) {
            push({-m + shift, Summand::cyclic(1), component, Slot::P, m, i});
            push({-m + 1 + shift, Summand::cyclic(1), component, Slot::SigmaP, m, i});
        }
    }
}

}  // namespace

CoeffModel coeff_model(Which which, int p, int k, const PStar& pstar, int lo, int hi) {
    // the window must not out-run the P table (deepest class: P^m at -m-1)
    if (lo <= 1 && pstar.N < 1 - lo)
        throw graded::TruncationError("coeff_model: P table too short for window");
    CoeffModel model;
    model.p = p;
    model.k = k;
    auto push = [&](ModelClass c) {
        if (c.degree >= lo && c.degree <= hi) model.classes.push_back(c);
    };
    switch (which) {
        case Which::P_:
            for (int m = 0; m <= pstar.N; ++m)
                for (int i = 0; i < pstar.dim(m); ++i)
                    push({-m, Summand::cyclic(1), 0, Slot::P, m, i});
            break;
        case Which::FZZ:
            push({0, Summand::padic(), 0, Slot::Cyclic, 0, 0});
            for (int m = 0; m <= pstar.N; ++m)
                for (int i = 0; i < pstar.dim(m); ++i)
                    push({-m, Summand::cyclic(1), 0, Slot::P, m, i});
            break;
        case Which::B:
            append_fz_zpk(model, pstar, 1, 0, 0, lo, hi);
            break;
        case Which::FZ_Zpk:
            append_fz_zpk(model, pstar, k, 0, 0, lo, hi);
            break;
        case Which::A:
            append_fz_zpk(model, pstar, 1, 0, 0, lo, hi);
            append_fz_zpk(model, pstar, 1, 1, -1, lo, hi);
            break;
        case Which::FZpk:
            append_fz_zpk(model, pstar, k, 0, 0, lo, hi);
            append_fz_zpk(model, pstar, k, 1, -1, lo, hi);
            break;
    }
    return model;
}

CoeffModel lemma_lst_fiber(int p, int k, int l, const PStar& pstar, int lo, int hi,
                           bool zero_map) {
    // widen internally: cancellations reach one degree past the window
    int wlo = lo - 2, whi = hi + 2;
    CoeffModel src = coeff_model(Which::FZpk, p, k, pstar, wlo, whi);
    CoeffModel tgt = coeff_model(Which::FZpk, p, l, pstar, wlo, whi);

    CoeffModel out;
    out.p = p;
    out.k = k + l;

    if (zero_map) {
        out.classes = src.classes;
        for (const auto& c : tgt.classes) out.classes.push_back(c);
        CoeffModel clipped;
        clipped.p = p;
        clipped.k = out.k;
        for (const auto& c : out.classes)
            if (c.degree >= lo && c.degree <= hi) clipped.classes.push_back(c);
        return clipped;
    }

    // The (est6) matching. Source Sigma-P families map isomorphically onto the
    // target P families of the same component; everything else survives:
    //   fiber = ker (source cyclics and P slots)
    //        (+) coker (target cyclics and Sigma-P slots),
    // with the Z/p^k and Z/p^l cyclic pieces extending to Z/p^{k+l}.
    for (const auto& c : src.classes) {
        if (c.slot == Slot::SigmaP) continue;  // cancelled against target P
        if (c.slot == Slot::Cyclic) {
            ModelClass ext = c;
            ext.summand = Summand::cyclic(k + l);
            out.classes.push_back(ext);
        } else {
            out.classes.push_back(c);
        }
    }
    for (const auto& c : tgt.classes) {
        if (c.slot == Slot::P) continue;     // hit by the source Sigma-P families
        if (c.slot == Slot::Cyclic) continue;  // absorbed into the extensions above
        out.classes.push_back(c);  // surviving Sigma-P cokernel classes
    }

    CoeffModel clipped;
    clipped.p = p;
    clipped.k = out.k;
    for (const auto& c : out.classes)
        if (c.degree >= lo && c.degree <= hi) clipped.classes.push_back(c);
    return clipped;
}

std::optional<graded::Summand> chain_limit(const std::vector<int>& exponents, int mult_power) {
    if (exponents.empty()) return std::nullopt;
    if (mult_power > 0) return std::nullopt;  // stable images shrink to 0
    // mult_power == 0: reduction maps; limit determined by the exponent tail
    size_t n = exponents.size();
    if (n >= 2 && exponents[n - 1] == exponents[n - 2]) {
        // stabilized order
        if (exponents.back() == 0) return std::nullopt;
        return graded::Summand::cyclic(exponents.back());
    }
    if (n >= 3 && exponents[n - 1] == exponents[n - 2] + 1 && exponents[n - 2] == exponents[n - 3] + 1)
        return graded::Summand::padic();
    throw std::logic_error("chain_limit: tower did not stabilize in the materialized range");
}

graded::GradedGroup tower_limit_est10(int p, const PStar& pstar, int lo, int hi, int cutoff_k) {
    if (cutoff_k < 3) throw std::invalid_argument("tower cutoff too small to witness stabilization");
    GradedGroup out(p);
    // the canonical map F(HZ/p^k) -> F(HZ/p^{k-1}) restricts per class:
    //   cyclic   -> reduction (multiplier p^0)
    //   P        -> identity
    //   Sigma P  -> zero (multiplication by p kills the torsion part)
    std::vector<CoeffModel> levels;
    for (int k = 1; k <= cutoff_k; ++k) levels.push_back(coeff_model(Which::FZpk, p, k, pstar, lo, hi));

    // classes are matched across levels by (degree, component, slot, m, index)
    const CoeffModel& top = levels.back();
    for (const auto& c : top.classes) {
        std::vector<int> exps;
        for (int k = 1; k <= cutoff_k; ++k) {
            bool found = false;
            for (const auto& d : levels[k - 1].classes) {
                if (d.degree == c.degree && d.component == c.component && d.slot == c.slot &&
                    d.p_internal == c.p_internal && d.p_index == c.p_index) {
                    exps.push_back(d.summand.exponent);
                    found = true;
                    break;
                }
            }
            if (!found) exps.push_back(0);
        }
        std::optional<graded::Summand> lim;
        switch (c.slot) {
            case Slot::Cyclic: lim = chain_limit(exps, 0); break;
            case Slot::P: lim = graded::Summand::cyclic(1); break;
            case Slot::SigmaP: lim = std::nullopt; break;
        }
        if (lim) out.add(c.degree, *lim);
    }
    return out;
}

}  // namespace cacti::steenrod
