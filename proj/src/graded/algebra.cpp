#include "cacti/graded/algebra.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

namespace cacti::graded {

long long binomial_mod(long long n, long long k, long long modulus) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    mpz_class m(static_cast<long>(modulus));
    mpz_class r = b % m;
    return r.get_si();
}

PresentedAlgebra::PresentedAlgebra(AlgebraPresentation pres, int lo, int hi)
    : pres_(std::move(pres)), lo_(lo), hi_(hi) {
    if (lo_ > hi_) throw std::invalid_argument("empty degree range");
    modulus_ = 1;
    for (int i = 0; i < pres_.coeff_exponent; ++i) modulus_ *= pres_.prime;

    bool unbounded_pos = false, unbounded_neg = false;
    for (size_t g = 0; g < pres_.generators.size(); ++g) {
        int d = pres_.generators[g].degree;
        if (max_exponent(g) < 0) {
            if (d == 0)
                throw std::invalid_argument("infinite basis in degree: free generator of degree 0");
            (d > 0 ? unbounded_pos : unbounded_neg) = true;
        }
    }
    if (unbounded_pos && unbounded_neg)
        throw std::invalid_argument("infinite basis in degree: unbounded generators of mixed sign");

    Monomial cur;
    cur.exps.assign(pres_.generators.size(), 0);
    enumerate(0, cur, 0);
    for (auto& [d, v] : basis_) std::sort(v.begin(), v.end());
}

int PresentedAlgebra::max_exponent(size_t gen) const {
    switch (pres_.kind) {
        case AlgebraKind::Exterior: return 1;
        case AlgebraKind::TruncatedPolynomial: return pres_.truncation_height - 1;
        default: return -1;
    }
}

void PresentedAlgebra::enumerate(size_t gen, Monomial& cur, int degree) {
    if (gen == pres_.generators.size()) {
        if (degree >= lo_ && degree <= hi_) basis_[degree].push_back(cur);
        return;
    }
    int d = pres_.generators[gen].degree;
    int maxe = max_exponent(gen);
    for (int e = 0;; ++e) {
        if (maxe >= 0 && e > maxe) break;
        int nd = degree + e * d;
        // prune: remaining generators can only push the degree in one
        // direction per sign; stop when the window is unreachable
        if (d > 0 && nd > hi_) {
            bool neg_left = false;
            for (size_t g = gen + 1; g < pres_.generators.size(); ++g)
                if (pres_.generators[g].degree < 0) neg_left = true;
            if (!neg_left) break;
            int reach = nd;
            for (size_t g = gen + 1; g < pres_.generators.size(); ++g) {
                int gd = pres_.generators[g].degree;
                int ge = max_exponent(g);
                if (gd < 0) reach += gd * (ge < 0 ? (reach - lo_) / (-gd) + 1 : ge);
            }
            if (reach > hi_) break;
        }
        if (d < 0 && nd < lo_) {
            bool pos_left = false;
            for (size_t g = gen + 1; g < pres_.generators.size(); ++g)
                if (pres_.generators[g].degree > 0) pos_left = true;
            if (!pos_left) break;
            int reach = nd;
            for (size_t g = gen + 1; g < pres_.generators.size(); ++g) {
                int gd = pres_.generators[g].degree;
                int ge = max_exponent(g);
                if (gd > 0) reach += gd * (ge < 0 ? (hi_ - reach) / gd + 1 : ge);
            }
            if (reach < lo_) break;
        }
        if (d == 0 && e > (maxe < 0 ? 0 : maxe)) break;
        cur.exps[gen] = e;
        enumerate(gen + 1, cur, nd);
        cur.exps[gen] = 0;
        if (d == 0 && maxe < 0) break;  // degree-0 bounded handled above
    }
}

int PresentedAlgebra::degree_of(const Monomial& m) const {
    int d = 0;
    for (size_t g = 0; g < m.exps.size(); ++g) d += m.exps[g] * pres_.generators[g].degree;
    return d;
}

std::string PresentedAlgebra::label(const Monomial& m) const {
    std::ostringstream os;
    bool any = false;
    for (size_t g = 0; g < m.exps.size(); ++g) {
        if (!m.exps[g]) continue;
        if (any) os << "*";
        any = true;
        const auto& gen = pres_.generators[g];
        if (pres_.kind == AlgebraKind::DividedPower) {
            if (m.exps[g] == 1)
                os << gen.name;
            else
                os << "g" << m.exps[g] << "(" << gen.name << ")";
        } else {
            os << gen.name;
            if (m.exps[g] > 1) os << "^" << m.exps[g];
        }
    }
    if (!any) os << "1";
    return os.str();
}

const std::vector<Monomial>& PresentedAlgebra::basis(int degree) const {
    static const std::vector<Monomial> empty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? empty : it->second;
}

GradedVectorSpace PresentedAlgebra::space() const {
    GradedVectorSpace out(pres_.prime);
    for (const auto& [d, v] : basis_) {
        std::vector<std::string> labels;
        labels.reserve(v.size());
        for (const auto& m : v) labels.push_back(label(m));
        out.set_basis(d, std::move(labels));
    }
    return out;
}

Term PresentedAlgebra::multiply(const Monomial& a, const Monomial& b) const {
    Term out;
    out.mon.exps.assign(a.exps.size(), 0);
    long long coeff = 1;

    // Koszul sign: factors of b move left past later factors of a
    long long swaps = 0;
    for (size_t i = 0; i < b.exps.size(); ++i) {
        if (!(pres_.generators[i].degree & 1) || !(b.exps[i] & 1)) continue;
        for (size_t j = i + 1; j < a.exps.size(); ++j)
            if ((pres_.generators[j].degree & 1) && (a.exps[j] & 1)) ++swaps;
    }
    int sign = (swaps & 1) ? -1 : 1;

    for (size_t g = 0; g < a.exps.size(); ++g) {
        int e = a.exps[g] + b.exps[g];
        switch (pres_.kind) {
            case AlgebraKind::Exterior:
                if (e > 1) return {0, out.mon};
                break;
            case AlgebraKind::TruncatedPolynomial:
                if (e >= pres_.truncation_height) return {0, out.mon};
                break;
            case AlgebraKind::DividedPower:
                coeff = coeff * binomial_mod(e, a.exps[g], modulus_) % modulus_;
                if (coeff == 0) return {0, out.mon};
                break;
            case AlgebraKind::Polynomial:
                // odd-degree square vanishes at odd p (graded commutativity)
                if (pres_.prime != 2 && (pres_.generators[g].degree & 1) && e > 1)
                    return {0, out.mon};
                break;
        }
        out.mon.exps[g] = e;
    }
    coeff = coeff * sign % modulus_;
    if (coeff < 0) coeff += modulus_;
    out.coeff = coeff;
    return out;
}

PresentedAlgebra polynomial_algebra(const std::string& gen, int degree, int p, int lo, int hi) {
    return PresentedAlgebra({AlgebraKind::Polynomial, {{gen, degree}}, p, 1, 0}, lo, hi);
}

PresentedAlgebra exterior_algebra(const std::string& gen, int degree, int p, int lo, int hi) {
    return PresentedAlgebra({AlgebraKind::Exterior, {{gen, degree}}, p, 1, 0}, lo, hi);
}

PresentedAlgebra divided_power_algebra(const std::string& gen, int degree, int p, int coeff_exp,
                                       int lo, int hi) {
    return PresentedAlgebra({AlgebraKind::DividedPower, {{gen, degree}}, p, coeff_exp, 0}, lo, hi);
}

}  // namespace cacti::graded
