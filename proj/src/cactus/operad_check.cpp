#include "cacti/cactus/operad_check.hpp"

#include <sstream>

namespace cacti::cactus {

namespace {

std::string describe(const LabelledCactus& c) {
    return to_json(c);
}

// label permutation induced on a o_i b by relabeling the outer factor
std::vector<int> outer_induced(const std::vector<int>& sigma, int i, int m, int n) {
    std::vector<int> tau(n + m - 1);
    auto adj = [&](int v) { return v < sigma[i - 1] ? v : v + m - 1; };
    for (int x = 1; x <= n + m - 1; ++x) {
        int val;
        if (x < i)
            val = adj(sigma[x - 1]);
        else if (x <= i + m - 1)
            val = sigma[i - 1] + (x - i);
        else
            val = adj(sigma[x - m]);
        tau[x - 1] = val;
    }
    return tau;
}

// label permutation induced on a o_i b by relabeling the inner factor
std::vector<int> inner_induced(const std::vector<int>& rho, int i, int m, int n) {
    std::vector<int> tau(n + m - 1);
    for (int x = 1; x <= n + m - 1; ++x) {
        if (x < i || x > i + m - 1)
            tau[x - 1] = x;
        else
            tau[x - 1] = i - 1 + rho[x - i];
    }
    return tau;
}

}  // namespace

std::vector<LabelledCactus> standard_seed_library() {
    LabelledCactus nested = compose(two_lobed(Rational(1, 3), Rational(2, 3)), 2,
                                    two_lobed(Rational(1, 4), Rational(1, 2)));
    return {unit_cactus(), corona(2), corona(3), two_lobed(Rational(1, 2), Rational(3, 4)), nested};
}

OperadReport operad_check(const std::vector<LabelledCactus>& seeds, int depth,
                          const ComposeFn& compose_fn) {
    ComposeFn comp = compose_fn ? compose_fn
                                : [](const LabelledCactus& a, int i, const LabelledCactus& b) {
                                      return compose(a, i, b);
                                  };
    OperadReport report;
    auto fail = [&](const std::string& what, const std::string& detail) {
        if (!report.ok) return;
        report.ok = false;
        report.failure = what + ": " + detail;
    };

    // closure under validity, Euler characteristic, arity additivity
    std::vector<LabelledCactus> current = seeds;
    for (int d = 0; d < depth && report.ok; ++d) {
        std::vector<LabelledCactus> next;
        for (const auto& x : current) {
            for (const auto& s : seeds) {
                for (int i = 1; i <= x.arity() && report.ok; ++i) {
                    LabelledCactus c;
                    try {
                        c = comp(x, i, s);
                    } catch (const std::exception& e) {
                        fail("closure", e.what());
                        break;
                    }
                    ++report.composites_checked;
                    if (!validate(c.datum).empty()) fail("validity", describe(c));
                    if (c.arity() != x.arity() + s.arity() - 1)
                        fail("arity additivity", describe(c));
                    if (euler_characteristic(c.datum) != 1)
                        fail("euler characteristic", describe(c));
                    if (d + 1 < depth) next.push_back(c);
                }
            }
        }
        current = std::move(next);
    }

    LabelledCactus unit = unit_cactus();
    for (const auto& s : seeds) {
        if (!report.ok) break;
        ++report.identities_checked;
        if (!(comp(unit, 1, s) == s)) fail("left unit", describe(s));
        for (int i = 1; i <= s.arity(); ++i)
            if (!(comp(s, i, unit) == s)) fail("right unit", describe(s));
    }

    // associativity in both nesting patterns, over seed triples
    for (const auto& a : seeds) {
        for (const auto& b : seeds) {
            for (const auto& c : seeds) {
                if (!report.ok) return report;
                for (int i = 1; i <= a.arity(); ++i) {
                    LabelledCactus ab = comp(a, i, b);
                    // nested: slot inside b
                    for (int j = 1; j <= b.arity(); ++j) {
                        ++report.identities_checked;
                        LabelledCactus lhs = comp(ab, i - 1 + j, c);
                        LabelledCactus rhs = comp(a, i, comp(b, j, c));
                        if (!(lhs == rhs))
                            fail("associativity (nested)",
                                 describe(a) + " slot " + std::to_string(i) + " / " +
                                     std::to_string(j));
                    }
                    // disjoint: slot in a beyond i
                    for (int j = i + 1; j <= a.arity(); ++j) {
                        ++report.identities_checked;
                        LabelledCactus lhs = comp(ab, j + b.arity() - 1, c);
                        LabelledCactus rhs = comp(comp(a, j, c), i, b);
                        if (!(lhs == rhs))
                            fail("associativity (disjoint)",
                                 describe(a) + " slots " + std::to_string(i) + "," +
                                     std::to_string(j));
                    }
                }
            }
        }
    }

    // equivariance under transpositions of either factor's labels
    for (const auto& a : seeds) {
        for (const auto& b : seeds) {
            if (!report.ok) return report;
            int n = a.arity(), m = b.arity();
            for (int i = 1; i <= n; ++i) {
                LabelledCactus ab = comp(a, i, b);
                for (int x = 1; x < n; ++x) {
                    std::vector<int> sigma(n);
                    for (int k = 0; k < n; ++k) sigma[k] = k + 1;
                    std::swap(sigma[x - 1], sigma[x]);
                    ++report.identities_checked;
                    LabelledCactus lhs = comp(relabel(a, sigma), sigma[i - 1], b);
                    LabelledCactus rhs = relabel(ab, outer_induced(sigma, i, m, n));
                    if (!(lhs == rhs)) fail("equivariance (outer)", describe(a));
                }
                for (int x = 1; x < m; ++x) {
                    std::vector<int> rho(m);
                    for (int k = 0; k < m; ++k) rho[k] = k + 1;
                    std::swap(rho[x - 1], rho[x]);
                    ++report.identities_checked;
                    LabelledCactus lhs = comp(a, i, relabel(b, rho));
                    LabelledCactus rhs = relabel(ab, inner_induced(rho, i, m, n));
                    if (!(lhs == rhs)) fail("equivariance (inner)", describe(b));
                }
            }
        }
    }
    return report;
}

}  // namespace cacti::cactus
