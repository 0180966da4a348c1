#include "cacti/graded/bar.hpp"

#include <cstdlib>

#include "cacti/graded/fp_matrix.hpp"

namespace cacti::graded {

namespace {

// basis element of bar degree s: a word of s augmentation-ideal monomials
struct Word {
    std::vector<Monomial> letters;
    friend auto operator<=>(const Word&, const Word&) = default;
};

struct BarLevel {
    std::map<int, std::vector<Word>> by_degree;  // internal degree -> words
    std::map<Word, int> index_in_degree;
};

std::map<int, std::vector<Monomial>> ideal_basis(const PresentedAlgebra& a) {
    std::map<int, std::vector<Monomial>> out;
    for (const auto& [d, v] : a.all())
        if (d != 0) out[d] = v;  // connected: unit spans degree 0
    return out;
}

BarLevel build_level(const PresentedAlgebra& a, int s, int t_max) {
    BarLevel lvl;
    std::map<int, std::vector<Monomial>> ideal = ideal_basis(a);
    std::vector<Monomial> cur;
    auto rec = [&](auto&& self, int remaining, int degree) -> void {
        if (std::abs(degree) > t_max) return;  // single-sign letters: degree is monotone
        if (remaining == 0) {
            lvl.by_degree[degree].push_back(Word{cur});
            return;
        }
        for (const auto& [d, v] : ideal)
            for (const auto& m : v) {
                cur.push_back(m);
                self(self, remaining - 1, degree + d);
                cur.pop_back();
            }
    };
    rec(rec, s, 0);
    for (auto& [d, v] : lvl.by_degree) {
        std::sort(v.begin(), v.end());
        for (size_t i = 0; i < v.size(); ++i) lvl.index_in_degree[v[i]] = static_cast<int>(i);
    }
    return lvl;
}

// bar differential with suspension signs: deg(s a) = |a| + 1
FpMatrix bar_d(const PresentedAlgebra& a, const BarLevel& from, const BarLevel& to, int degree,
               int p) {
    auto src_it = from.by_degree.find(degree);
    auto dst_it = to.by_degree.find(degree);
    int nsrc = src_it == from.by_degree.end() ? 0 : static_cast<int>(src_it->second.size());
    int ndst = dst_it == to.by_degree.end() ? 0 : static_cast<int>(dst_it->second.size());
    FpMatrix m(ndst, nsrc, p);
    if (!nsrc || !ndst) return m;
    for (int c = 0; c < nsrc; ++c) {
        const Word& w = src_it->second[c];
        int s = static_cast<int>(w.letters.size());
        int sign_acc = 0;
        for (int i = 0; i + 1 < s; ++i) {
            sign_acc += a.degree_of(w.letters[i]) + 1;
            Term prod = a.multiply(w.letters[i], w.letters[i + 1]);
            if (prod.coeff % p == 0) continue;
            if (a.degree_of(prod.mon) == 0) continue;  // unit component is killed in Abar
            Word next;
            next.letters.reserve(s - 1);
            for (int j = 0; j < i; ++j) next.letters.push_back(w.letters[j]);
            next.letters.push_back(prod.mon);
            for (int j = i + 2; j < s; ++j) next.letters.push_back(w.letters[j]);
            auto it = to.index_in_degree.find(next);
            if (it == to.index_in_degree.end()) throw TruncationError("bar: word left the window");
            long long coeff = prod.coeff % p;
            if (sign_acc & 1) coeff = -coeff;
            int r = it->second;
            m.set(r, c, m.at(r, c) + coeff);
        }
    }
    return m;
}

}  // namespace

Bigraded bar_tor(const PresentedAlgebra& algebra, int s_max, int t_max) {
    if (algebra.lo() > -t_max || algebra.hi() < t_max)
        throw TruncationError("bar: algebra window narrower than requested internal range");
    int p = algebra.presentation().prime;
    std::vector<BarLevel> levels;
    levels.reserve(s_max + 2);
    for (int s = 0; s <= s_max + 1; ++s) levels.push_back(build_level(algebra, s, t_max));

    Bigraded out;
    for (int s = 0; s <= s_max; ++s) {
        for (const auto& [t, words] : levels[s].by_degree) {
            FpMatrix d_in = bar_d(algebra, levels[s + 1], levels[s], t, p);
            int rank_out = 0;
            if (s > 0) rank_out = bar_d(algebra, levels[s], levels[s - 1], t, p).rank();
            int h = static_cast<int>(words.size()) - rank_out - d_in.rank();
            if (h < 0) throw std::logic_error("bar: negative homology rank");
            if (h > 0) out.dims[{s, t}] = h;
        }
    }
    return out;
}

Bigraded cobar_ext(const PresentedAlgebra& algebra, int s_max, int t_max) {
    if (algebra.lo() > -t_max || algebra.hi() < t_max)
        throw TruncationError("cobar: algebra window narrower than requested internal range");
    int p = algebra.presentation().prime;
    std::vector<BarLevel> levels;
    levels.reserve(s_max + 2);
    for (int s = 0; s <= s_max + 1; ++s) levels.push_back(build_level(algebra, s, t_max));

    Bigraded out;
    for (int s = 0; s <= s_max; ++s) {
        for (const auto& [t, words] : levels[s].by_degree) {
            // cochain differentials: transposes of the bar differentials
            FpMatrix d_up = bar_d(algebra, levels[s + 1], levels[s], t, p).transpose();
            int rank_down = 0;
            if (s > 0) rank_down = bar_d(algebra, levels[s], levels[s - 1], t, p).transpose().rank();
            int h = static_cast<int>(words.size()) - d_up.rank() - rank_down;
            if (h < 0) throw std::logic_error("cobar: negative cohomology rank");
            if (h > 0) out.dims[{s, t}] = h;
        }
    }
    return out;
}

}  // namespace cacti::graded
