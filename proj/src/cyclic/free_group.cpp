#include "cacti/cyclic/free_group.hpp"

#include <map>
#include <stdexcept>

#include "cacti/graded/fp_matrix.hpp"

namespace cacti::cyclic {

std::vector<std::vector<int>> reduced_words(int n_gens, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int g = 1; g <= n_gens; ++g) {
            for (int s : {g, -g}) {
                if (!cur.empty() && cur.back() == -s) continue;
                cur.push_back(s);
                self(self, remaining - 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, len);
    return out;
}

namespace {

std::vector<int> append_letter(std::vector<int> w, int letter) {
    if (!w.empty() && w.back() == -letter)
        w.pop_back();
    else
        w.push_back(letter);
    return w;
}

std::vector<int> prepend_letter(int letter, std::vector<int> w) {
    if (!w.empty() && w.front() == -letter) {
        w.erase(w.begin());
    } else {
        w.insert(w.begin(), letter);
    }
    return w;
}

}  // namespace

FreeGroupReport free_group_thc(int n_gens, int max_len, int p) {
    if (max_len < 1) throw std::invalid_argument("free_group_thc: need max_len >= 1");
    FreeGroupReport rep;
    rep.n_gens = n_gens;
    rep.max_len = max_len;
    rep.p = p;

    // source basis: words of length <= max_len; target: words <= max_len+1 per generator
    std::map<std::vector<int>, int> src_index, tgt_index;
    std::vector<int> src_len, tgt_len;
    for (int l = 0; l <= max_len; ++l)
        for (auto& w : reduced_words(n_gens, l)) {
            src_index[w] = static_cast<int>(src_len.size());
            src_len.push_back(l);
        }
    for (int l = 0; l <= max_len + 1; ++l)
        for (auto& w : reduced_words(n_gens, l)) {
            tgt_index[w] = static_cast<int>(tgt_len.size());
            tgt_len.push_back(l);
        }

    int nsrc = static_cast<int>(src_len.size());
    int ntgt = static_cast<int>(tgt_len.size());
    graded::FpMatrix m(ntgt * n_gens, nsrc, p);
    for (const auto& [w, col] : src_index) {
        for (int g = 1; g <= n_gens; ++g) {
            std::vector<int> wa = append_letter(w, g);
            std::vector<int> aw = prepend_letter(g, w);
            int block = (g - 1) * ntgt;
            int r1 = block + tgt_index.at(wa);
            m.set(r1, col, m.at(r1, col) + 1);
            int r2 = block + tgt_index.at(aw);
            m.set(r2, col, m.at(r2, col) - 1);
        }
    }

    // kernel of the filtration stages: restrict columns to words of length <= l
    for (int l = 0; l <= max_len; ++l) {
        std::vector<int> cols;
        for (int c = 0; c < nsrc; ++c)
            if (src_len[c] <= l) cols.push_back(c);
        graded::FpMatrix sub(ntgt * n_gens, static_cast<int>(cols.size()), p);
        for (size_t j = 0; j < cols.size(); ++j)
            for (int r = 0; r < sub.rows(); ++r) sub.at(r, static_cast<int>(j)) = m.at(r, cols[j]);
        rep.kernel_by_length.push_back(static_cast<int>(cols.size()) - sub.rank());
    }

    // cokernel of the associated-graded map per target length stratum:
    // the length-raising part of w -> sum (w a_i - a_i w), which is the
    // truncation-safe reading of the stratumwise cokernel
    for (int l = 0; l <= max_len; ++l) {
        std::vector<int> rows;
        for (int g = 0; g < n_gens; ++g)
            for (int t = 0; t < ntgt; ++t)
                if (tgt_len[t] == l) rows.push_back(g * ntgt + t);
        std::vector<int> cols;
        for (int c = 0; c < nsrc; ++c)
            if (src_len[c] == l - 1) cols.push_back(c);
        graded::FpMatrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()), p);
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t i = 0; i < rows.size(); ++i)
                sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
        rep.cokernel_by_length.push_back(static_cast<int>(rows.size()) - sub.rank());
    }
    return rep;
}

}  // namespace cacti::cyclic
