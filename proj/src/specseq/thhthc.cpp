#include "cacti/specseq/thhthc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cacti/specseq/thh.hpp"

namespace cacti::specseq {

using graded::GradedGroup;
using graded::GradedVectorSpace;
using graded::Summand;
using graded::TruncationError;
using steenrod::BocksteinTables;
using steenrod::BQuotient;
using steenrod::CoeffModel;
using steenrod::MilnorAlgebra;
using steenrod::ModelClass;
using steenrod::PStar;
using steenrod::Slot;

ThhThcBox ThhThcBox::for_window(int lo, int hi) {
    if (lo > hi) throw TruncationError("empty window");
    ThhThcBox box;
    box.lo = lo;
    box.hi = hi;
    box.y_cap = std::max(6, (hi - lo) / 4 + 2);
    box.gamma_cap = box.y_cap;
    box.e_cap = 2 * box.y_cap;
    box.milnor_n = std::max(24, 2 * box.y_cap - box.internal_lo() + 2);
    return box;
}

GradedVectorSpace thhthc_nonequivariant(const MilnorAlgebra& milnor, const ThhThcBox& box) {
    int p = milnor.prime();
    GradedVectorSpace out(p);
    // direct enumeration over sigma^j gamma_i . (A-basis element)
    for (int j = 0; j <= box.y_cap; ++j)
        for (int i = 0; i <= box.gamma_cap; ++i)
            for (int m = 0; m <= milnor.truncation(); ++m) {
                int d = 2 * j - 2 * i - m;
                if (d < box.lo || d > box.hi) continue;
                out.set_dim(d, out.dim(d) + milnor.dim(m));
            }
    // independent convolution count
    for (int d = box.lo; d <= box.hi; ++d) {
        int count = 0;
        for (int j = 0; j <= box.y_cap; ++j)
            for (int i = 0; i <= box.gamma_cap; ++i) {
                int m = 2 * j - 2 * i - d;
                if (m >= 0 && m <= milnor.truncation()) count += milnor.dim(m);
            }
        if (count != out.dim(d))
            throw std::logic_error("thhthc_nonequivariant: convolution cross-check failed");
    }
    return out;
}

GradedGroup BorelTHHTHC::total() const {
    GradedGroup out = cyclic_part;
    for (const auto& c : gamma_part)
        if (c.degree() >= box.internal_lo() && c.degree() <= box.internal_hi())
            out.add_cyclic(c.degree(), 1);
    for (const auto& c : e_part)
        if (c.degree() >= box.internal_lo() && c.degree() <= box.internal_hi())
            out.add_cyclic(c.degree(), 1);
    return out;
}

BorelTHHTHC run_thhthc_borel(int p, int r, const ThhThcBox& box, const MilnorAlgebra& milnor,
                             const BocksteinTables& tables) {
    if (r < 2) throw std::invalid_argument("run_thhthc_borel: r >= 2");
    BorelTHHTHC out;
    out.p = p;
    out.r = r;
    out.box = box;
    out.cyclic_part = GradedGroup(p);
    int N = milnor.truncation();
    int wlo = box.internal_lo(), whi = box.internal_hi();

    // stage 1: the gamma-lowering differential with the right Bockstein.
    // Exactness of (A^*, Q0^R), checked on the actual matrices, collapses
    // every slice to its boundary row/columns.
    for (int m = 0; m + 1 <= N - 1; ++m) {
        int rank_m = tables.right.at(m).rank();
        int rank_prev = m ? tables.right.at(m - 1).rank() : 0;
        if (milnor.dim(m) != rank_m + rank_prev)
            throw std::logic_error("thhthc Borel stage 1: (A, Q0^R) not exact at degree " +
                                   std::to_string(m));
    }
    BQuotient b = steenrod::b_quotient(milnor, tables);

    // stage 2: the sigma-raising differential with the left Bockstein on B.
    // Homology of (B, Q0) is F_p in degree 0; the unit classes become the
    // free sigma/e lattice handled in stage 3.
    for (int m = 0; m + 1 <= N - 1; ++m) {
        int rank_m = b.induced_q0.at(m).rank();
        int rank_prev = m ? b.induced_q0.at(m - 1).rank() : 0;
        if (b.dim(m) != rank_m + rank_prev + (m == 0 ? 1 : 0))
            throw std::logic_error("thhthc Borel stage 2: (B, Q0^L) not a Koszul complex at " +
                                   std::to_string(m));
    }
    PStar pstar = steenrod::p_star(milnor, b);

    // surviving gamma-part [sigma] (x) Gamma_{<0} (x) B{e_0, e_1}
    for (int j = 0; j <= box.y_cap; ++j)
        for (int i = 1; i <= box.gamma_cap; ++i)
            for (int k = 0; k <= 1; ++k)
                for (int m = 0; m <= N; ++m) {
                    int d = 2 * j - 2 * i - m + k;
                    if (d < wlo || d > whi) continue;
                    for (int idx = 0; idx < b.dim(m); ++idx)
                        out.gamma_part.push_back({j, i, k, m, idx});
                }

    // surviving e-part (P + P[1]){e_k}
    for (int k = 0; k <= box.e_cap; ++k)
        for (int m = 1; m <= N; ++m) {
            for (int idx = 0; idx < pstar.dim(m); ++idx) {
                BorelTHHTHC::EClass plain{false, k, m, idx};
                if (plain.degree() >= wlo && plain.degree() <= whi) out.e_part.push_back(plain);
                BorelTHHTHC::EClass susp{true, k, m, idx};
                if (susp.degree() >= wlo && susp.degree() <= whi) out.e_part.push_back(susp);
            }
        }

    // stage 3: the unit-class lattice Z/p[sigma]{e_k} with the Tate-type
    // differential and the p = x sigma extensions
    {
        std::set<std::pair<int, int>> survivors;  // (a, k)
        int a_max = std::max(0, whi) / 2 + r + 2;
        int k_max = std::max(0, whi) + 2 * r + 2;
        for (int a = 0; a <= a_max; ++a)
            for (int k = 0; k <= k_max; ++k) {
                if (k % 2 == 0 && k <= 2 * r - 2) survivors.insert({a, k});
                if (k % 2 == 1 && a <= r - 2) survivors.insert({a, k});
            }
        for (const auto& [a, k] : survivors) {
            if (a > 0 && survivors.count({a - 1, k + 2})) continue;  // not a chain head
            int len = 1;
            int ca = a, ck = k;
            while (ck - 2 >= 0 && survivors.count({ca + 1, ck - 2})) {
                ++len;
                ++ca;
                ck -= 2;
            }
            int d = 2 * a + k;
            if (d >= wlo && d <= whi) out.cyclic_part.add_cyclic(d, len);
        }
    }
    return out;
}

// closed-form dimension audit for the three Borel summands
void audit_borel_closed_forms(const BorelTHHTHC& bor, const MilnorAlgebra& milnor,
                              const BocksteinTables& tables) {
    int p = bor.p;
    BQuotient b = steenrod::b_quotient(milnor, tables);
    PStar ps = steenrod::p_star(milnor, b);
    const ThhThcBox& box = bor.box;
    for (int d = box.lo; d <= box.hi; ++d) {
        long long want = 0;
        for (int j = 0; j <= box.y_cap; ++j)
            for (int i = 1; i <= box.gamma_cap; ++i)
                for (int k = 0; k <= 1; ++k) {
                    int m = 2 * j - 2 * i + k - d;
                    if (m >= 0 && m <= milnor.truncation()) want += b.dim(m);
                }
        long long have = 0;
        for (const auto& c : bor.gamma_part)
            if (c.degree() == d) ++have;
        if (want != have) throw std::logic_error("Borel audit: gamma part dims off at " + std::to_string(d));

        want = 0;
        for (int k = 0; k <= box.e_cap; ++k) {
            int m = k - d;
            if (m >= 1 && m <= milnor.truncation()) want += ps.dim(m);
            int msusp = k - d + 1;
            if (msusp >= 1 && msusp <= milnor.truncation()) want += ps.dim(msusp);
        }
        have = 0;
        for (const auto& c : bor.e_part)
            if (c.degree() == d) ++have;
        if (want != have) throw std::logic_error("Borel audit: e part dims off at " + std::to_string(d));
    }
    // the cyclic part must match the Borel homology table for THH(F_p)
    GradedGroup reference = run_borel_thh(p, bor.r, 0, box.hi, BorelVariant::Homology);
    for (int d = 0; d <= box.hi; ++d)
        if (!(bor.cyclic_part.at(d) == reference.at(d)))
            throw std::logic_error("Borel audit: cyclic part differs from the THH table at " +
                                   std::to_string(d));
}

GradedGroup ThhThcFixed::group(int lo, int hi) const {
    GradedGroup out(p);
    for (const auto& c : classes) {
        int d = c.mc.degree;
        if (d >= lo && d <= hi) out.add(d, c.mc.summand);
    }
    return out;
}

ThhThcFixed thhthc_fixed_points(int p, int r, const ThhThcBox& box, const MilnorAlgebra& milnor,
                                const BocksteinTables& tables) {
    if (r < 1) throw std::invalid_argument("thhthc_fixed_points: r >= 1");
    BQuotient b = steenrod::b_quotient(milnor, tables);
    PStar pstar = steenrod::p_star(milnor, b);
    int wlo = box.internal_lo(), whi = box.internal_hi();

    // base of the induction: the trivial group, where the answer is the
    // non-equivariant one with y playing sigma
    ThhThcFixed cur;
    cur.p = p;
    cur.r = 1;
    cur.box = box;
    for (int i = 0; i <= box.gamma_cap; ++i)
        for (int j = 0; j <= box.y_cap; ++j) {
            int shift = 2 * (j - i);
            CoeffModel copy = steenrod::coeff_model(steenrod::Which::FZpk, p, 1, pstar,
                                                    wlo - shift, whi - shift);
            for (const auto& mc : copy.classes) {
                ModelClass shifted = mc;
                shifted.degree += shift;
                cur.classes.push_back({i, j, shifted});
            }
        }

    for (int level = 2; level <= r; ++level) {
        BorelTHHTHC borel = run_thhthc_borel(p, level, box, milnor, tables);
        ThhThcFixed next;
        next.p = p;
        next.r = level;
        next.box = box;

        // ---- columns gamma_i, i >= 1: one Lemma-style fiber per (i, j) ----
        // budget check: the Borel gamma part must offer exactly B{e_0,e_1}
        // per column, which is the suspended A-copy the matching consumes
        std::map<std::tuple<int, int, int, int>, int> gamma_count;  // (j, i, k, m) -> count
        for (const auto& c : borel.gamma_part) ++gamma_count[{c.j, c.i, c.k, c.m}];
        for (int i = 1; i <= box.gamma_cap; ++i)
            for (int j = 0; j <= box.y_cap; ++j)
                for (int k = 0; k <= 1; ++k)
                    for (int m = 0; m <= milnor.truncation(); ++m) {
                        int d = 2 * j - 2 * i - m + k;
                        if (d < wlo + 2 || d > whi - 2) continue;
                        auto it = gamma_count.find({j, i, k, m});
                        int have = it == gamma_count.end() ? 0 : it->second;
                        if (have != b.dim(m))
                            throw std::logic_error(
                                "fixed points: Borel gamma budget mismatch in column (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
                    }
        for (int i = 1; i <= box.gamma_cap; ++i)
            for (int j = 0; j <= box.y_cap; ++j) {
                int shift = 2 * (j - i);
                CoeffModel fiber = steenrod::coeff_model(steenrod::Which::FZpk, p, level, pstar,
                                                         wlo - shift, whi - shift);
                for (const auto& mc : fiber.classes) {
                    ModelClass shifted = mc;
                    shifted.degree += shift;
                    next.classes.push_back({i, j, shifted});
                }
            }

        // ---- column gamma_0 ----
        // index the source classes of the column
        std::vector<const ThhThcFixed::C*> col0;
        for (const auto& c : cur.classes)
            if (c.gamma == 0) col0.push_back(&c);

        // cyclic towers: the unsuspended copy runs the THH(F_p) bookkeeping
        // against the (ethh7)-type part, the desuspended copy carries the
        // Bockstein extension
        for (const auto* c : col0) {
            if (c->mc.slot != Slot::Cyclic) continue;
            ModelClass mc = c->mc;
            int deg = mc.degree;
            if (mc.component == 0) {
                // degree 2j: must surject onto the odd part below, then
                // extend by the even part
                int odd_exp = 0, even_exp = 0;
                if (deg >= 1) {
                    auto odd = borel.cyclic_part.at(deg - 1);
                    odd_exp = odd.empty() ? 0 : odd.front().exponent;
                }
                auto even = borel.cyclic_part.at(deg);
                even_exp = even.empty() ? 0 : even.front().exponent;
                if (deg >= 0 && deg <= whi - 2) {
                    if (mc.summand.exponent < odd_exp)
                        throw std::logic_error("fixed points: no surjection onto odd Borel part");
                    int total = even_exp + mc.summand.exponent - odd_exp;
                    if (total != level)
                        throw std::logic_error("fixed points: cyclic extension bookkeeping off at " +
                                               std::to_string(deg));
                }
                mc.summand = Summand::cyclic(level);
            } else {
                // the desuspended tower: standard Bockstein extension
                mc.summand = Summand::cyclic(level);
            }
            next.classes.push_back({0, c->ypow, mc});
        }

        // P-type families: suspended source families cancel the P{e_k}
        // families, unsuspended ones survive, and the P[1]{e_k} classes
        // come in as the new suspended families
        std::map<std::tuple<bool, int, int>, int> e_count;  // (suspended, k, m) -> count
        for (const auto& c : borel.e_part) ++e_count[{c.suspended, c.k, c.m}];
        for (const auto* c : col0) {
            if (c->mc.slot == Slot::Cyclic) continue;
            if (c->mc.slot == Slot::P) {
                next.classes.push_back({0, c->ypow, c->mc});
                continue;
            }
            // SigmaP: cancelled against P{e_k} with k = 2 ypow (component 0)
            // or k = 2 ypow - 1 (component 1); the j = 0 desuspended family
            // has no partner and survives
            int k = c->mc.component == 0 ? 2 * c->ypow : 2 * c->ypow - 1;
            if (k < 0) {
                next.classes.push_back({0, c->ypow, c->mc});
                continue;
            }
            int d = c->mc.degree;
            if (d >= wlo + 2 && d <= whi - 2 && k <= box.e_cap) {
                auto it = e_count.find({false, k, c->mc.p_internal});
                if (it == e_count.end() || it->second <= 0)
                    throw std::logic_error("fixed points: missing P{e_k} partner at k = " +
                                           std::to_string(k));
                --it->second;
            }
        }
        for (const auto& c : borel.e_part) {
            if (!c.suspended) continue;  // consumed above
            ModelClass mc;
            mc.degree = c.degree();
            mc.summand = Summand::cyclic(1);
            mc.slot = Slot::SigmaP;
            mc.p_internal = c.m;
            mc.p_index = c.idx;
            int ypow;
            if (c.k % 2 == 0) {
                mc.component = 0;
                ypow = c.k / 2;
            } else {
                mc.component = 1;
                ypow = (c.k + 1) / 2;
            }
            if (ypow > box.y_cap) continue;
            next.classes.push_back({0, ypow, mc});
        }

        cur = std::move(next);
    }
    return cur;
}

GradedGroup et21_closed_form(int p, int r, const ThhThcBox& box, const PStar& pstar) {
    GradedGroup out(p);
    for (int i = 0; i <= box.gamma_cap; ++i)
        for (int j = 0; j <= box.y_cap; ++j) {
            int shift = 2 * (j - i);
            CoeffModel copy = steenrod::coeff_model(steenrod::Which::FZpk, p, r, pstar,
                                                    box.lo - shift, box.hi - shift);
            for (const auto& mc : copy.classes) out.add(mc.degree + shift, mc.summand);
        }
    return out;
}

GradedGroup tr_thhthc(int p, const ThhThcBox& box, int cutoff, const MilnorAlgebra& milnor,
                      const BocksteinTables& tables) {
    if (cutoff < 4) throw std::invalid_argument("tr_thhthc: cutoff too small");
    std::vector<ThhThcFixed> levels;
    for (int r = 1; r <= cutoff; ++r)
        levels.push_back(thhthc_fixed_points(p, r, box, milnor, tables));

    // chains matched by the full class label
    using Key = std::tuple<int, int, int, int, int, int, int>;
    auto key_of = [](const ThhThcFixed::C& c) {
        return Key{c.gamma, c.ypow, c.mc.degree, c.mc.component, static_cast<int>(c.mc.slot),
                   c.mc.p_internal, c.mc.p_index};
    };
    std::map<Key, std::vector<int>> chains;
    for (int lvl = 0; lvl < cutoff; ++lvl) {
        for (const auto& c : levels[lvl].classes) {
            auto& v = chains[key_of(c)];
            if (static_cast<int>(v.size()) < lvl) v.resize(lvl, 0);
            v.push_back(c.mc.summand.kind == Summand::Kind::Cyclic ? c.mc.summand.exponent : 0);
        }
    }
    GradedGroup out(p);
    for (auto& [key, exps] : chains) {
        auto [gamma, ypow, degree, component, slot, m, idx] = key;
        exps.resize(cutoff, 0);
        // the restriction map multiplies by p^{ypow} and kills the
        // suspended torsion families
        int mult = ypow + (static_cast<Slot>(slot) == Slot::SigmaP ? 1 : 0);
        auto lim = steenrod::chain_limit(exps, mult);
        if (lim && degree >= box.lo && degree <= box.hi) out.add(degree, *lim);
    }
    return out;
}

GradedGroup et22_closed_form(int p, const ThhThcBox& box, const PStar& pstar) {
    GradedGroup est10 =
        steenrod::tower_limit_est10(p, pstar, box.lo - 1, box.hi + 2 * box.gamma_cap + 2, 5);
    GradedGroup out(p);
    for (int i = 0; i <= box.gamma_cap; ++i)
        for (const auto& [d, v] : est10.entries())
            for (const auto& s : v) {
                int degree = d - 2 * i;
                if (degree >= box.lo && degree <= box.hi) out.add(degree, s);
            }
    return out;
}

}  // namespace cacti::specseq
