#include "cacti/specseq/thh.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "cacti/steenrod/models.hpp"

namespace cacti::specseq {

using graded::GradedGroup;
using graded::Summand;
using graded::TruncationError;

namespace {

// monomial sigma^a x^b u^eps of the Tate page
struct Mono {
    int a, b, eps;
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

enum class Region { Tate, BorelCohomology, BorelHomology };

int displayed_degree(const Mono& m, Region reg) {
    int d = 2 * m.a - 2 * m.b - m.eps;
    if (reg == Region::BorelHomology) d -= 1;
    return d;
}

bool in_region(const Mono& m, Region reg) {
    if (m.a < 0 || (m.eps != 0 && m.eps != 1)) return false;
    switch (reg) {
        case Region::Tate: return true;
        case Region::BorelCohomology: return m.b >= 0;
        case Region::BorelHomology: return m.b <= -1;
    }
    return false;
}

// survivors of the single differential d^{2r-1} u = x^r sigma^{r-1},
// restricted to the monomials whose displayed degree lies in the window
std::set<Mono> page_survivors(int p, int r, Region reg, int lo, int hi) {
    (void)p;
    // a-cap: extension chains stop at a = r-2 for non-u classes; keep a
    // margin and assert nothing survives beyond it
    int a_cap = 2 * r + 2;
    std::set<Mono> survivors;
    for (int a = 0; a <= a_cap; ++a) {
        for (int eps = 0; eps <= 1; ++eps) {
            // b solves lo <= 2a - 2b - eps - [shift] <= hi
            for (int d = lo; d <= hi; ++d) {
                int shift = reg == Region::BorelHomology ? 1 : 0;
                int twice_b = 2 * a - eps - shift - d;
                if (twice_b % 2 != 0) continue;
                Mono m{a, twice_b / 2, eps};
                if (!in_region(m, reg)) continue;
                if (m.eps == 1) {
                    // killed unless the target leaves the region
                    Mono target{m.a + r - 1, m.b + r, 0};
                    if (!in_region(target, reg)) survivors.insert(m);
                } else {
                    // killed when a preimage u sigma^{a-r+1} x^{b-r} exists
                    Mono source{m.a - r + 1, m.b - r, 1};
                    bool hit = source.a >= 0 && in_region(source, reg);
                    if (!hit) survivors.insert(m);
                }
            }
        }
    }
    for (const auto& m : survivors)
        if (m.a > a_cap - 2)
            throw std::logic_error("tate/borel page: survivor beyond the sigma margin");
    return survivors;
}

// multiplicative extension p = x sigma: chains under m -> (a+1, b+1, eps)
GradedGroup resolve_extensions(int p, const std::set<Mono>& survivors, Region reg, int lo,
                               int hi) {
    GradedGroup out(p);
    for (const auto& m : survivors) {
        Mono pred{m.a - 1, m.b - 1, m.eps};
        if (m.a > 0 && survivors.count(pred)) continue;  // not a chain head
        int len = 1;
        Mono cur = m;
        while (true) {
            Mono next{cur.a + 1, cur.b + 1, cur.eps};
            if (!survivors.count(next)) break;
            ++len;
            cur = next;
        }
        int d = displayed_degree(m, reg);
        if (d >= lo && d <= hi) out.add_cyclic(d, len);
    }
    return out;
}

}  // namespace

GradedGroup run_tate_thh(int p, int r, int lo, int hi) {
    if (r < 2) throw std::invalid_argument("run_tate_thh: r >= 2");
    if (lo > hi) throw TruncationError("empty window");
    return resolve_extensions(p, page_survivors(p, r, Region::Tate, lo, hi), Region::Tate, lo, hi);
}

GradedGroup run_borel_thh(int p, int r, int lo, int hi, BorelVariant variant) {
    if (r < 2) throw std::invalid_argument("run_borel_thh: r >= 2");
    Region reg = variant == BorelVariant::Homology ? Region::BorelHomology : Region::BorelCohomology;
    return resolve_extensions(p, page_survivors(p, r, reg, lo, hi), reg, lo, hi);
}

FixedPointsTHH fixed_points_thh(int p, int r, int lo, int hi) {
    if (r < 1) throw std::invalid_argument("fixed_points_thh: r >= 1");
    FixedPointsTHH out;
    out.p = p;
    out.r = r;
    out.groups = GradedGroup(p);

    // exponent of the cyclic group at each even degree, built inductively
    std::map<int, int> exps;  // degree -> exponent
    for (int d = 0; d <= hi; d += 2) exps[d] = 1;  // r = 1: Z/p[sigma]

    for (int level = 2; level <= r; ++level) {
        GradedGroup borel = run_borel_thh(p, level, 0, hi + 2, BorelVariant::Homology);
        std::map<int, int> next;
        for (int d = 0; d <= hi; d += 2) {
            auto coker = borel.at(d);
            if (coker.size() != 1)
                throw std::logic_error("fixed_points_thh: Borel even part not cyclic");
            int coker_exp = coker.front().exponent;
            int odd_exp = 0;
            if (d >= 2) {
                auto odd = borel.at(d - 1);
                if (odd.size() > 1)
                    throw std::logic_error("fixed_points_thh: Borel odd part not cyclic");
                odd_exp = odd.empty() ? 0 : odd.front().exponent;
            }
            int src_exp = exps.at(d);
            if (src_exp < odd_exp)
                throw std::logic_error(
                    "fixed_points_thh: source cannot surject onto the odd Borel part");
            next[d] = coker_exp + (src_exp - odd_exp);
            if (next[d] != level)
                throw std::logic_error("fixed_points_thh: extension bookkeeping mismatch");
        }
        exps = std::move(next);
    }
    for (const auto& [d, e] : exps)
        if (d >= lo && d <= hi) out.groups.add_cyclic(d, e);
    return out;
}

GradedGroup tr_thh(int p, int lo, int hi, int cutoff) {
    if (cutoff < 4) throw std::invalid_argument("tr_thh: cutoff too small for stabilization");
    std::vector<FixedPointsTHH> levels;
    for (int r = 1; r <= cutoff; ++r) levels.push_back(fixed_points_thh(p, r, lo, hi));
    GradedGroup out(p);
    for (int d = lo; d <= hi; ++d) {
        if (d < 0 || d % 2 != 0) continue;
        std::vector<int> exps;
        for (const auto& lvl : levels) {
            auto v = lvl.groups.at(d);
            exps.push_back(v.empty() ? 0 : v.front().exponent);
        }
        auto lim = steenrod::chain_limit(exps, FixedPointsTHH::r_map_multiplier_exponent(d));
        if (lim) out.add(d, *lim);
    }
    return out;
}

}  // namespace cacti::specseq
