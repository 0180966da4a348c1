#include "cacti/cyclic/cochains.hpp"

#include "cacti/graded/fp_matrix.hpp"

#include <stdexcept>

namespace cacti::cyclic {

using cacti::graded::FpMatrix;

HochschildCochains::HochschildCochains(const FiniteAlgebra& algebra, int n_max)
    : a_(algebra), n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("negative cochain bound");
    double size = 1;
    for (int i = 0; i < n_max + 2; ++i) size *= algebra.dim();
    if (size > 5e6) throw std::invalid_argument("cochain tables beyond budget");
}

int HochschildCochains::pow_dim(int e) const {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= a_.dim();
    return r;
}

std::vector<int> HochschildCochains::tuple_of(int degree, int index) const {
    std::vector<int> t(degree);
    for (int pos = degree - 1; pos >= 0; --pos) {
        t[pos] = index % a_.dim();
        index /= a_.dim();
    }
    return t;
}

int HochschildCochains::index_of(const std::vector<int>& tuple) const {
    int idx = 0;
    for (int x : tuple) idx = idx * a_.dim() + x;
    return idx;
}

Cochain HochschildCochains::zero(int degree) const {
    Cochain f;
    f.degree = degree;
    f.table.assign(pow_dim(degree), std::vector<int>(a_.dim(), 0));
    return f;
}

Cochain HochschildCochains::basis_cochain(int degree, int input_tuple, int output) const {
    Cochain f = zero(degree);
    f.table[input_tuple][output] = 1;
    return f;
}

int HochschildCochains::cochain_dim(int degree) const {
    return pow_dim(degree) * a_.dim();
}

std::vector<Cochain> HochschildCochains::basis(int degree) const {
    std::vector<Cochain> out;
    for (int i = 0; i < pow_dim(degree); ++i)
        for (int o = 0; o < a_.dim(); ++o) out.push_back(basis_cochain(degree, i, o));
    return out;
}

bool HochschildCochains::is_zero(const Cochain& f) const {
    for (const auto& row : f.table)
        for (int v : row)
            if (v % a_.prime() != 0) return false;
    return true;
}

Cochain HochschildCochains::add(const Cochain& f, const Cochain& g, int sign_g) const {
    if (f.degree != g.degree) throw std::invalid_argument("cochain add: degree mismatch");
    Cochain out = f;
    int p = a_.prime();
    for (size_t r = 0; r < out.table.size(); ++r)
        for (size_t c = 0; c < out.table[r].size(); ++c)
            out.table[r][c] = ((out.table[r][c] + sign_g * g.table[r][c]) % p + p) % p;
    return out;
}

Cochain HochschildCochains::scale(const Cochain& f, int c) const {
    Cochain out = f;
    int p = a_.prime();
    for (auto& row : out.table)
        for (auto& v : row) v = ((v * c) % p + p) % p;
    return out;
}

std::vector<int> HochschildCochains::eval_slot(const Cochain& f, const std::vector<int>& tuple,
                                               int slot, const std::vector<int>& vec) const {
    std::vector<int> out(a_.dim(), 0);
    int p = a_.prime();
    std::vector<int> t = tuple;
    for (int k = 0; k < a_.dim(); ++k) {
        if (!vec[k]) continue;
        t[slot] = k;
        const std::vector<int>& val = f.table[index_of(t)];
        for (int c = 0; c < a_.dim(); ++c) out[c] = (out[c] + vec[k] * val[c]) % p;
    }
    return out;
}

Cochain HochschildCochains::differential(const Cochain& f) const {
    int m = f.degree;
    Cochain out = zero(m + 1);
    int p = a_.prime();
    int dim = a_.dim();
    for (int idx = 0; idx < pow_dim(m + 1); ++idx) {
        std::vector<int> t = tuple_of(m + 1, idx);
        std::vector<int> acc(dim, 0);
        // a_1 f(a_2..)
        {
            std::vector<int> rest(t.begin() + 1, t.end());
            const std::vector<int>& fv = f.table[index_of(rest)];
            for (int k = 0; k < dim; ++k) {
                if (!fv[k]) continue;
                for (int c = 0; c < dim; ++c)
                    acc[c] = (acc[c] + fv[k] * a_.mul(t[0], k, c)) % p;
            }
        }
        // interior multiplications
        for (int i = 1; i <= m; ++i) {
            int sign = (i % 2 == 0) ? 1 : p - 1;
            std::vector<int> merged;
            merged.reserve(m);
            for (int pos = 0; pos <= m; ++pos) {
                if (pos == i - 1) continue;  // handled via product slot below
                merged.push_back(t[pos]);
            }
            // product a_i a_{i+1} put where slot i-1 was (0-based slot i-1)
            for (int k = 0; k < dim; ++k) {
                int coeff = a_.mul(t[i - 1], t[i], k);
                if (!coeff) continue;
                std::vector<int> args = merged;
                args[i - 1] = k;
                const std::vector<int>& fv = f.table[index_of(args)];
                for (int c = 0; c < dim; ++c)
                    acc[c] = (acc[c] + sign * coeff * fv[c]) % p;
            }
        }
        // (-1)^{m+1} f(a_1..a_m) a_{m+1}
        {
            int sign = ((m + 1) % 2 == 0) ? 1 : p - 1;
            std::vector<int> front(t.begin(), t.end() - 1);
            const std::vector<int>& fv = f.table[index_of(front)];
            for (int k = 0; k < dim; ++k) {
                if (!fv[k]) continue;
                for (int c = 0; c < dim; ++c)
                    acc[c] = (acc[c] + sign * fv[k] * a_.mul(k, t[m], c)) % p;
            }
        }
        for (int c = 0; c < dim; ++c) out.table[idx][c] = ((acc[c]) % p + p) % p;
    }
    return out;
}

Cochain HochschildCochains::cup(const Cochain& f, const Cochain& g) const {
    int m = f.degree, n = g.degree;
    Cochain out = zero(m + n);
    int p = a_.prime();
    int dim = a_.dim();
    for (int idx = 0; idx < pow_dim(m + n); ++idx) {
        std::vector<int> t = tuple_of(m + n, idx);
        std::vector<int> front(t.begin(), t.begin() + m);
        std::vector<int> back(t.begin() + m, t.end());
        const std::vector<int>& fv = f.table[index_of(front)];
        const std::vector<int>& gv = g.table[index_of(back)];
        for (int x = 0; x < dim; ++x) {
            if (!fv[x]) continue;
            for (int y = 0; y < dim; ++y) {
                if (!gv[y]) continue;
                long long coeff = static_cast<long long>(fv[x]) * gv[y];
                for (int c = 0; c < dim; ++c)
                    out.table[idx][c] =
                        static_cast<int>((out.table[idx][c] + coeff * a_.mul(x, y, c)) % p);
            }
        }
    }
    return out;
}

Cochain HochschildCochains::circ_at(const Cochain& f, int i, const Cochain& g) const {
    int m = f.degree, n = g.degree;
    if (i < 1 || i > m) throw std::invalid_argument("circ_at: bad slot");
    Cochain out = zero(m + n - 1);
    int dim = a_.dim();
    for (int idx = 0; idx < pow_dim(m + n - 1); ++idx) {
        std::vector<int> t = tuple_of(m + n - 1, idx);
        std::vector<int> gargs(t.begin() + (i - 1), t.begin() + (i - 1) + n);
        const std::vector<int>& gv = g.table[index_of(gargs)];
        // f arguments with slot i-1 replaced by g(...)
        std::vector<int> fargs;
        fargs.reserve(m);
        for (int pos = 0; pos < i - 1; ++pos) fargs.push_back(t[pos]);
        fargs.push_back(0);  // placeholder
        for (int pos = i - 1 + n; pos < m + n - 1; ++pos) fargs.push_back(t[pos]);
        std::vector<int> val = eval_slot(f, fargs, i - 1, gv);
        out.table[idx] = val;
    }
    return out;
}

Cochain HochschildCochains::brace(const Cochain& f, const std::vector<Cochain>& gs) const {
    int m = f.degree;
    int p = a_.prime();
    int k = static_cast<int>(gs.size());
    if (k == 0) return f;
    int total = m;
    for (const auto& g : gs) total += g.degree - 1;
    if (total < 0) return zero(0);
    Cochain out = zero(total);

    // sum over insertion positions 1 <= i_1, i_1 + n_1 <= i_2, ... within f
    std::vector<int> pos(k, 0);
    auto rec = [&](auto&& self, int which, int min_pos) -> void {
        if (which == k) {
            // iterated insertion, rightmost first so earlier slots stay put;
            // the sign counts inputs standing before each g_j in the composite
            Cochain acc = f;
            int sign_exp = 0, shift = 0;
            for (int j = 0; j < k; ++j) {
                sign_exp += (gs[j].degree - 1) * (pos[j] - 1 + shift);
                shift += gs[j].degree - 1;
            }
            for (int j = k - 1; j >= 0; --j) acc = circ_at(acc, pos[j], gs[j]);
            int sign = (sign_exp % 2 == 0) ? 1 : p - 1;
            out = add(out, scale(acc, sign));
            return;
        }
        for (int i = min_pos; i <= m; ++i) {
            pos[which] = i;
            self(self, which + 1, i + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

Cochain HochschildCochains::bracket(const Cochain& f, const Cochain& g) const {
    int m = f.degree, n = g.degree;
    Cochain fg = brace(f, {g});
    Cochain gf = brace(g, {f});
    int sign = (((m - 1) * (n - 1)) % 2 == 0) ? 1 : -1;
    return add(fg, gf, -sign);
}

Cochain HochschildCochains::multiplication() const {
    Cochain mu = zero(2);
    for (int i = 0; i < a_.dim(); ++i)
        for (int j = 0; j < a_.dim(); ++j) {
            std::vector<int> t{i, j};
            for (int c = 0; c < a_.dim(); ++c) mu.table[index_of(t)][c] = a_.mul(i, j, c);
        }
    return mu;
}

Cochain HochschildCochains::identity_cochain() const {
    Cochain id = zero(1);
    for (int i = 0; i < a_.dim(); ++i) id.table[i][i] = 1;
    return id;
}

std::vector<std::vector<int>> HochschildCochains::center() const {
    // kernel of d: C^0 -> C^1 over F_p
    FpMatrix m(a_.dim() * a_.dim(), a_.dim(), a_.prime());
    for (int v = 0; v < a_.dim(); ++v) {
        Cochain c0 = zero(0);
        c0.table[0][v] = 1;
        Cochain d = differential(c0);
        for (int r = 0; r < a_.dim(); ++r)
            for (int c = 0; c < a_.dim(); ++c) m.set(r * a_.dim() + c, v, d.table[r][c]);
    }
    return m.kernel_basis();
}

}  // namespace cacti::cyclic
