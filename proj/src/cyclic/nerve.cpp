#include "cacti/cyclic/nerve.hpp"

#include <cmath>
#include <stdexcept>

namespace cacti::cyclic {

using graded::FpMatrix;

CyclicNerve::CyclicNerve(const FiniteAlgebra& algebra, int k_max) : a_(algebra), k_max_(k_max) {
    double size = std::pow(static_cast<double>(algebra.dim()), k_max + 1);
    if (size > 2e6) throw std::invalid_argument("cyclic nerve: level size beyond budget");
}

int CyclicNerve::level_dim(int k) const {
    int d = 1;
    for (int i = 0; i <= k; ++i) d *= a_.dim();
    return d;
}

int CyclicNerve::tuple_index(const std::vector<int>& tuple) const {
    int idx = 0;
    for (int x : tuple) idx = idx * a_.dim() + x;
    return idx;
}

std::vector<int> CyclicNerve::tuple_of(int level, int index) const {
    std::vector<int> t(level + 1);
    for (int pos = level; pos >= 0; --pos) {
        t[pos] = index % a_.dim();
        index /= a_.dim();
    }
    return t;
}

FpMatrix CyclicNerve::face(int level, int i) const {
    if (level < 1 || i < 0 || i > level) throw std::invalid_argument("face index");
    FpMatrix m(level_dim(level - 1), level_dim(level), a_.prime());
    for (int col = 0; col < level_dim(level); ++col) {
        std::vector<int> t = tuple_of(level, col);
        // multiply slots (i, i+1), except the last face wraps to (level, 0)
        int lhs = i < level ? t[i] : t[level];
        int rhs = i < level ? t[i + 1] : t[0];
        for (int k = 0; k < a_.dim(); ++k) {
            int coeff = a_.mul(lhs, rhs, k);
            if (!coeff) continue;
            std::vector<int> out;
            out.reserve(level);
            if (i < level) {
                for (int pos = 0; pos <= level; ++pos) {
                    if (pos == i) {
                        out.push_back(k);
                        ++pos;  // skip i+1
                    } else {
                        out.push_back(t[pos]);
                    }
                }
            } else {
                out.push_back(k);
                for (int pos = 1; pos < level; ++pos) out.push_back(t[pos]);
            }
            int row = tuple_index(out);
            m.set(row, col, m.at(row, col) + coeff);
        }
    }
    return m;
}

FpMatrix CyclicNerve::degeneracy(int level, int i) const {
    if (i < 0 || i > level) throw std::invalid_argument("degeneracy index");
    FpMatrix m(level_dim(level + 1), level_dim(level), a_.prime());
    for (int col = 0; col < level_dim(level); ++col) {
        std::vector<int> t = tuple_of(level, col);
        std::vector<int> out;
        for (int pos = 0; pos <= level; ++pos) {
            out.push_back(t[pos]);
            if (pos == i) out.push_back(a_.unit_index());
        }
        m.set(tuple_index(out), col, 1);
    }
    return m;
}

FpMatrix CyclicNerve::cyclic_op(int level) const {
    FpMatrix m(level_dim(level), level_dim(level), a_.prime());
    for (int col = 0; col < level_dim(level); ++col) {
        std::vector<int> t = tuple_of(level, col);
        std::vector<int> out;
        out.push_back(t[level]);
        for (int pos = 0; pos < level; ++pos) out.push_back(t[pos]);
        m.set(tuple_index(out), col, 1);
    }
    return m;
}

FpMatrix CyclicNerve::boundary(int level) const {
    FpMatrix m(level_dim(level - 1), level_dim(level), a_.prime());
    int p = a_.prime();
    for (int i = 0; i <= level; ++i) {
        FpMatrix f = face(level, i);
        int sign = (i % 2 == 0) ? 1 : p - 1;
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                m.at(r, c) = (m.at(r, c) + sign * f.at(r, c)) % p;
    }
    return m;
}

std::vector<int> hh_dims(const FiniteAlgebra& algebra, int n_max) {
    CyclicNerve nerve(algebra, n_max + 1);
    std::vector<int> out;
    std::vector<int> ranks(n_max + 2, 0);
    for (int k = 1; k <= n_max + 1; ++k) ranks[k] = nerve.boundary(k).rank();
    for (int n = 0; n <= n_max; ++n) out.push_back(nerve.level_dim(n) - ranks[n] - ranks[n + 1]);
    return out;
}

// ---- monoid nerve, set level ----

Tuple monoid_face(const FiniteMonoid& m, int i, const Tuple& t) {
    int level = static_cast<int>(t.size()) - 1;
    if (i < 0 || i > level || level < 1) throw std::invalid_argument("monoid_face");
    Tuple out;
    out.reserve(level);
    if (i < level) {
        for (int pos = 0; pos <= level; ++pos) {
            if (pos == i) {
                out.push_back(m.table[t[i]][t[i + 1]]);
                ++pos;
            } else {
                out.push_back(t[pos]);
            }
        }
    } else {
        out.push_back(m.table[t[level]][t[0]]);
        for (int pos = 1; pos < level; ++pos) out.push_back(t[pos]);
    }
    return out;
}

Tuple monoid_degeneracy(const FiniteMonoid& m, int i, const Tuple& t) {
    int level = static_cast<int>(t.size()) - 1;
    if (i < 0 || i > level) throw std::invalid_argument("monoid_degeneracy");
    Tuple out;
    for (int pos = 0; pos <= level; ++pos) {
        out.push_back(t[pos]);
        if (pos == i) out.push_back(m.unit);
    }
    return out;
}

Tuple monoid_cyclic(const Tuple& t) {
    Tuple out;
    out.push_back(t.back());
    for (size_t pos = 0; pos + 1 < t.size(); ++pos) out.push_back(t[pos]);
    return out;
}

Tuple sd_face(const FiniteMonoid& m, int r, int level, int i, const Tuple& t) {
    if (static_cast<int>(t.size()) != r * (level + 1)) throw std::invalid_argument("sd_face tuple");
    // composite d_i d_{i+(k+1)} ... d_{i+(r-1)(k+1)}, applied top index first
    Tuple cur = t;
    for (int s = r - 1; s >= 0; --s) cur = monoid_face(m, i + s * level + s, cur);
    return cur;
}

Tuple sd_degeneracy(const FiniteMonoid& m, int r, int level, int i, const Tuple& t) {
    if (static_cast<int>(t.size()) != r * (level + 1)) throw std::invalid_argument("sd_degeneracy tuple");
    // composite s_{i+(r-1)(k+2)} ... s_{i+(k+2)} s_i: insert from the bottom up
    Tuple cur = t;
    for (int s = 0; s < r; ++s) cur = monoid_degeneracy(m, i + s * (level + 2), cur);
    return cur;
}

Tuple sd_rotation(int r, int level, const Tuple& t) {
    (void)r;
    int block = level + 1;
    Tuple cur = t;
    for (int step = 0; step < block; ++step) cur = monoid_cyclic(cur);
    return cur;
}

FixedPointReport fixed_points_check(const FiniteMonoid& m, int p, int max_level) {
    FixedPointReport rep;
    auto fail = [&](const std::string& s) {
        if (rep.ok) {
            rep.ok = false;
            rep.detail = s;
        }
    };
    for (int k = 0; k <= max_level && rep.ok; ++k) {
        // fixed simplices of sd_p at level k are exactly the p-fold repeats:
        // x fixed under rotation by k+1 in Z/(p(k+1)) iff block-periodic
        // (index orbits under +(k+1) are the p-element arithmetic chains).
        // Check the diagonal commutes with every face and degeneracy.
        std::vector<Tuple> tuples;
        Tuple cur(k + 1, 0);
        while (true) {
            tuples.push_back(cur);
            int pos = 0;
            while (pos <= k && ++cur[pos] == m.size()) cur[pos++] = 0;
            if (pos > k) break;
        }
        auto diag = [&](const Tuple& t) {
            Tuple out;
            for (int copy = 0; copy < p; ++copy) out.insert(out.end(), t.begin(), t.end());
            return out;
        };
        for (const Tuple& t : tuples) {
            // the diagonal is fixed
            if (sd_rotation(p, k, diag(t)) != diag(t)) fail("diagonal not fixed");
            if (k >= 1)
                for (int i = 0; i <= k; ++i)
                    if (sd_face(m, p, k, i, diag(t)) != diag(monoid_face(m, i, t)))
                        fail("face does not commute with the diagonal");
            for (int i = 0; i <= k; ++i)
                if (sd_degeneracy(m, p, k, i, diag(t)) != diag(monoid_degeneracy(m, i, t)))
                    fail("degeneracy does not commute with the diagonal");
        }
        // exhaustively confirm only diagonals are fixed when the level is small
        double total = std::pow(static_cast<double>(m.size()), p * (k + 1));
        if (total <= 70000) {
            Tuple full(p * (k + 1), 0);
            while (true) {
                if (sd_rotation(p, k, full) == full) {
                    bool diagonal = true;
                    for (int i = 0; i < static_cast<int>(full.size()); ++i)
                        if (full[i] != full[i % (k + 1)]) diagonal = false;
                    if (!diagonal) fail("non-diagonal fixed simplex");
                }
                size_t pos = 0;
                while (pos < full.size() && ++full[pos] == m.size()) full[pos++] = 0;
                if (pos == full.size()) break;
            }
        }
    }
    return rep;
}

FixedPointReport restriction_compat_check(const FiniteMonoid& m, int r1, int r2, int max_level) {
    FixedPointReport rep;
    // sd_{r1 r2} level k is nerve level r1 r2 (k+1) - 1; sd_{r1}(sd_{r2}) has
    // the same underlying tuples, and the face maps must agree
    for (int k = 0; k <= max_level; ++k) {
        int len = r1 * r2 * (k + 1);
        double total = std::pow(static_cast<double>(m.size()), len);
        if (total > 70000) break;
        if (k < 1) continue;
        Tuple t(len, 0);
        while (true) {
            for (int i = 0; i <= k && rep.ok; ++i) {
                Tuple via_big = sd_face(m, r1 * r2, k, i, t);
                // sd_{r1} of the sd_{r2}-object: faces of sd_{r2} at level
                // r1(k+1)-1 composed r1 times
                Tuple cur = t;
                for (int s = r1 - 1; s >= 0; --s) {
                    int inner_level = r1 * (k + 1) - 1;  // level inside sd_{r2}
                    (void)inner_level;
                    // face index in the sd_{r2} object
                    cur = sd_face(m, r2, (static_cast<int>(cur.size()) / r2) - 1,
                                  i + s * (k + 1), cur);
                }
                if (via_big != cur) {
                    rep.ok = false;
                    rep.detail = "sd_{r1 r2} face differs from iterated subdivision";
                }
            }
            if (!rep.ok) return rep;
            size_t pos = 0;
            while (pos < t.size() && ++t[pos] == m.size()) t[pos++] = 0;
            if (pos == t.size()) break;
        }
    }
    return rep;
}

}  // namespace cacti::cyclic
