#include "cacti/steenrod/milnor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cacti::steenrod {

MilnorAlgebra::MilnorAlgebra(int p, int N) : p_(p), N_(N) {
    if (N < 0) throw std::invalid_argument("negative truncation");
    if (p == 2) {
        for (long long d = 1; d <= N; d = 2 * d + 1) xi_degrees_.push_back(static_cast<int>(d));
    } else {
        for (long long q = p; 2 * (q - 1) <= N; q *= p) xi_degrees_.push_back(static_cast<int>(2 * (q - 1)));
        for (long long q = 1; 2 * q - 1 <= N; q *= p) tau_degrees_.push_back(static_cast<int>(2 * q - 1));
    }

    basis_.resize(N + 1);
    MilnorMonomial cur;
    cur.xi.assign(xi_degrees_.size(), 0);
    cur.tau.assign(tau_degrees_.size(), 0);
    // enumerate tau bits then xi exponents
    auto rec_xi = [&](auto&& self, size_t g, int degree) -> void {
        if (g == xi_degrees_.size()) {
            basis_[degree].push_back(cur);
            return;
        }
        for (int e = 0; degree + e * xi_degrees_[g] <= N; ++e) {
            cur.xi[g] = e;
            self(self, g + 1, degree + e * xi_degrees_[g]);
        }
        cur.xi[g] = 0;
    };
    auto rec_tau = [&](auto&& self, size_t g, int degree) -> void {
        if (g == tau_degrees_.size()) {
            rec_xi(rec_xi, 0, degree);
            return;
        }
        cur.tau[g] = 0;
        self(self, g + 1, degree);
        if (degree + tau_degrees_[g] <= N) {
            cur.tau[g] = 1;
            self(self, g + 1, degree + tau_degrees_[g]);
            cur.tau[g] = 0;
        }
    };
    rec_tau(rec_tau, 0, 0);

    for (auto& v : basis_) std::sort(v.begin(), v.end());
    for (int d = 0; d <= N; ++d)
        for (size_t i = 0; i < basis_[d].size(); ++i) index_[basis_[d][i]] = static_cast<int>(i);
}

const std::vector<MilnorMonomial>& MilnorAlgebra::basis(int n) const {
    if (n < 0) {
        static const std::vector<MilnorMonomial> empty;
        return empty;
    }
    if (n > N_) throw std::out_of_range("degree beyond Milnor truncation");
    return basis_[n];
}

int MilnorAlgebra::dim(int n) const {
    return n < 0 ? 0 : static_cast<int>(basis(n).size());
}

int MilnorAlgebra::index_of(const MilnorMonomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("monomial not in basis");
    return it->second;
}

int MilnorAlgebra::degree_of(const MilnorMonomial& m) const {
    int d = 0;
    for (size_t g = 0; g < m.xi.size(); ++g) d += m.xi[g] * xi_degrees_[g];
    for (size_t g = 0; g < m.tau.size(); ++g)
        if (m.tau[g]) d += tau_degrees_[g];
    return d;
}

std::string MilnorAlgebra::label(const MilnorMonomial& m) const {
    std::ostringstream os;
    bool any = false;
    for (size_t g = 0; g < m.tau.size(); ++g)
        if (m.tau[g]) {
            if (any) os << " ";
            any = true;
            os << "t" << g;
        }
    for (size_t g = 0; g < m.xi.size(); ++g)
        if (m.xi[g]) {
            if (any) os << " ";
            any = true;
            os << "x" << (g + 1);
            if (m.xi[g] > 1) os << "^" << m.xi[g];
        }
    if (!any) os << "1";
    return os.str();
}

MilnorMonomial MilnorAlgebra::unit() const {
    MilnorMonomial m;
    m.xi.assign(xi_degrees_.size(), 0);
    m.tau.assign(tau_degrees_.size(), 0);
    return m;
}

std::pair<int, MilnorMonomial> MilnorAlgebra::multiply(const MilnorMonomial& a,
                                                       const MilnorMonomial& b) const {
    MilnorMonomial out = unit();
    for (size_t g = 0; g < out.xi.size(); ++g) out.xi[g] = a.xi[g] + b.xi[g];
    int sign = 1;
    for (size_t g = 0; g < out.tau.size(); ++g) {
        if (a.tau[g] && b.tau[g]) return {0, out};
        out.tau[g] = a.tau[g] | b.tau[g];
    }
    // Koszul sign from interleaving the tau words (taus are odd, xis even)
    long long inversions = 0;
    for (size_t i = 0; i < b.tau.size(); ++i) {
        if (!b.tau[i]) continue;
        for (size_t j = i + 1; j < a.tau.size(); ++j)
            if (a.tau[j]) ++inversions;
    }
    if (inversions & 1) sign = -sign;
    return {sign, out};
}

TensorElt MilnorAlgebra::generator_coproduct(bool is_tau, int index) const {
    // psi(xi_n) = sum_i xi_{n-i}^{p^i} (x) xi_i          (xi_0 = 1)
    // psi(tau_n) = tau_n (x) 1 + sum_i xi_{n-i}^{p^i} (x) tau_i
    TensorElt out;
    int n = index;  // xi generators are 1-based (xi_{index+1}); taus 0-based
    if (!is_tau) {
        int gen = index + 1;
        for (int i = 0; i <= gen; ++i) {
            MilnorMonomial l = unit(), r = unit();
            long long power = 1;
            for (int t = 0; t < i; ++t) power *= p_;
            if (gen - i > 0) {
                if (static_cast<size_t>(gen - i - 1) >= l.xi.size()) continue;
                // degree guard: high powers blow past the truncation and are
                // dropped by the caller's caps anyway
                l.xi[gen - i - 1] = static_cast<int>(power);
            }
            if (i > 0) {
                if (static_cast<size_t>(i - 1) >= r.xi.size()) continue;
                r.xi[i - 1] = 1;
            }
            out[{l, r}] += 1;
        }
    } else {
        MilnorMonomial l = unit(), r = unit();
        l.tau[n] = 1;
        out[{l, r}] += 1;
        for (int i = 0; i <= n; ++i) {
            MilnorMonomial li = unit(), ri = unit();
            long long power = 1;
            for (int t = 0; t < i; ++t) power *= p_;
            if (n - i > 0) {
                if (static_cast<size_t>(n - i - 1) >= li.xi.size()) continue;
                li.xi[n - i - 1] = static_cast<int>(power);
            }
            ri.tau[i] = 1;
            out[{li, ri}] += 1;
        }
    }
    return out;
}

TensorElt MilnorAlgebra::tensor_multiply(const TensorElt& a, const TensorElt& b, int left_cap,
                                         int right_cap) const {
    TensorElt out;
    for (const auto& [ta, ca] : a) {
        for (const auto& [tb, cb] : b) {
            auto [sl, l] = multiply(ta.first, tb.first);
            if (!sl) continue;
            if (degree_of(l) > left_cap) continue;
            auto [sr, r] = multiply(ta.second, tb.second);
            if (!sr) continue;
            if (degree_of(r) > right_cap) continue;
            // (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd
            int sign = sl * sr;
            if ((degree_of(ta.second) & 1) && (degree_of(tb.first) & 1)) sign = -sign;
            int& slot = out[{l, r}];
            slot = ((slot + sign * ca * cb) % p_ + p_) % p_;
        }
    }
    // drop zeros
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

TensorElt MilnorAlgebra::coproduct_capped(const MilnorMonomial& m, int left_cap,
                                          int right_cap) const {
    TensorElt acc;
    acc[{unit(), unit()}] = 1;
    for (size_t g = 0; g < m.tau.size(); ++g)
        if (m.tau[g]) acc = tensor_multiply(acc, generator_coproduct(true, static_cast<int>(g)),
                                            left_cap, right_cap);
    for (size_t g = 0; g < m.xi.size(); ++g) {
        TensorElt gen = generator_coproduct(false, static_cast<int>(g));
        for (int e = 0; e < m.xi[g]; ++e) acc = tensor_multiply(acc, gen, left_cap, right_cap);
    }
    return acc;
}

TensorElt MilnorAlgebra::coproduct(const MilnorMonomial& m) const {
    int d = degree_of(m);
    return coproduct_capped(m, d, d);
}

TensorElt MilnorAlgebra::coproduct_left_slice(const MilnorMonomial& m, int cap) const {
    return coproduct_capped(m, cap, degree_of(m));
}

TensorElt MilnorAlgebra::coproduct_right_slice(const MilnorMonomial& m, int cap) const {
    return coproduct_capped(m, degree_of(m), cap);
}

MilnorMonomial MilnorAlgebra::degree_one_primitive() const {
    MilnorMonomial m = unit();
    if (p_ == 2)
        m.xi[0] = 1;
    else
        m.tau[0] = 1;
    return m;
}

}  // namespace cacti::steenrod
