#include "cacti/graded/fp_matrix.hpp"

#include <stdexcept>

namespace cacti::graded {

int mod_inverse(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("mod_inverse of 0");
    int result = 1, base = a, e = p - 2;  // p prime
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

FpMatrix::FpMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
    data_.assign(static_cast<size_t>(rows) * cols, 0);
}

void FpMatrix::set(int r, int c, long long v) {
    v %= p_;
    if (v < 0) v += p_;
    at(r, c) = static_cast<int>(v);
}

FpMatrix FpMatrix::identity(int n, int p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::multiply(const FpMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dims");
    FpMatrix out(rows_, other.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < other.cols_; ++j)
                out.at(i, j) = (out.at(i, j) + a * other.at(k, j)) % p_;
        }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

namespace {

// Gaussian elimination on a copy; returns pivot column per row-echelon step.
std::vector<int> eliminate(FpMatrix m, std::vector<int>* pivot_cols) {
    int p = m.prime();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col)) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        int inv = mod_inverse(m.at(row, col), p);
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv % p;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || !m.at(r, col)) continue;
            int f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c)
                m.at(r, c) = ((m.at(r, c) - f * m.at(row, c)) % p + p) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    if (pivot_cols) *pivot_cols = pivots;
    return pivots;
}

}  // namespace

int FpMatrix::rank() const {
    return static_cast<int>(eliminate(*this, nullptr).size());
}

FpMatrix FpMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_, p = p_;
    FpMatrix m = *this;
    FpMatrix inv = identity(n, p);
    for (int col = 0, row = 0; col < n; ++col, ++row) {
        int sel = -1;
        for (int r = row; r < n; ++r)
            if (m.at(r, col)) {
                sel = r;
                break;
            }
        if (sel < 0) throw std::invalid_argument("singular matrix");
        for (int c = 0; c < n; ++c) {
            std::swap(m.at(sel, c), m.at(row, c));
            std::swap(inv.at(sel, c), inv.at(row, c));
        }
        int f = mod_inverse(m.at(row, col), p);
        for (int c = 0; c < n; ++c) {
            m.at(row, c) = m.at(row, c) * f % p;
            inv.at(row, c) = inv.at(row, c) * f % p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == row || !m.at(r, col)) continue;
            int g = m.at(r, col);
            for (int c = 0; c < n; ++c) {
                m.at(r, c) = ((m.at(r, c) - g * m.at(row, c)) % p + p) % p;
                inv.at(r, c) = ((inv.at(r, c) - g * inv.at(row, c)) % p + p) % p;
            }
        }
    }
    return inv;
}

std::vector<std::vector<int>> FpMatrix::kernel_basis() const {
    // reduce, then back-substitute free columns
    FpMatrix m = *this;
    int p = p_;
    std::vector<int> pivots;
    // re-run elimination but keep the reduced matrix
    {
        int row = 0;
        for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
            int sel = -1;
            for (int r = row; r < m.rows(); ++r)
                if (m.at(r, col)) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
            int inv = mod_inverse(m.at(row, col), p);
            for (int c = 0; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv % p;
            for (int r = 0; r < m.rows(); ++r) {
                if (r == row || !m.at(r, col)) continue;
                int f = m.at(r, col);
                for (int c = 0; c < m.cols(); ++c)
                    m.at(r, c) = ((m.at(r, c) - f * m.at(row, c)) % p + p) % p;
            }
            pivots.push_back(col);
            ++row;
        }
    }
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(cols_, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            int c = pivots[r];
            int val = m.at(static_cast<int>(r), free);
            if (val) v[c] = (p - val) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<int>> FpMatrix::image_basis() const {
    // pivot columns of the original matrix span the image
    std::vector<int> pivots = eliminate(*this, nullptr);
    std::vector<std::vector<int>> basis;
    for (int c : pivots) {
        std::vector<int> v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> FpMatrix::cokernel_rep_indices() const {
    // append identity columns and track which ones enter the echelon basis
    std::vector<std::vector<int>> span = image_basis();
    std::vector<std::vector<int>> ech = echelon_span(span, p_);
    std::vector<int> reps;
    for (int i = 0; i < rows_; ++i) {
        std::vector<int> e(rows_, 0);
        e[i] = 1;
        std::vector<int> rem = reduce_against(e, ech, p_);
        bool nonzero = false;
        for (int x : rem) nonzero |= (x != 0);
        if (nonzero) {
            reps.push_back(i);
            ech.push_back(rem);
            ech = echelon_span(std::move(ech), p_);
        }
    }
    return reps;
}

std::vector<std::vector<int>> echelon_span(std::vector<std::vector<int>> vecs, int p) {
    std::vector<std::vector<int>> basis;
    for (auto& v : vecs) {
        std::vector<int> rem = reduce_against(std::move(v), basis, p);
        bool nonzero = false;
        size_t piv = 0;
        for (size_t i = 0; i < rem.size(); ++i)
            if (rem[i]) {
                nonzero = true;
                piv = i;
                break;
            }
        if (!nonzero) continue;
        int inv = mod_inverse(rem[piv], p);
        for (auto& x : rem) x = x * inv % p;
        // insert keeping pivots ordered
        size_t pos = 0;
        auto pivot_of = [](const std::vector<int>& w) {
            for (size_t i = 0; i < w.size(); ++i)
                if (w[i]) return i;
            return w.size();
        };
        while (pos < basis.size() && pivot_of(basis[pos]) < piv) ++pos;
        basis.insert(basis.begin() + pos, std::move(rem));
    }
    // back-eliminate
    for (size_t i = 0; i < basis.size(); ++i) {
        size_t piv = 0;
        while (piv < basis[i].size() && !basis[i][piv]) ++piv;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (j == i || piv >= basis[i].size()) continue;
            int f = basis[j][piv];
            if (!f) continue;
            for (size_t c = 0; c < basis[j].size(); ++c)
                basis[j][c] = ((basis[j][c] - f * basis[i][c]) % p + p) % p;
        }
    }
    return basis;
}

int span_rank(const std::vector<std::vector<int>>& vecs, int p) {
    return static_cast<int>(echelon_span(vecs, p).size());
}

std::vector<int> reduce_against(std::vector<int> v, const std::vector<std::vector<int>>& ech, int p) {
    for (const auto& b : ech) {
        size_t piv = 0;
        while (piv < b.size() && !b[piv]) ++piv;
        if (piv >= b.size()) continue;
        int f = v[piv];
        if (!f) continue;
        // b[piv] is 1 after normalization in echelon_span
        int factor = f * mod_inverse(b[piv], p) % p;
        for (size_t c = 0; c < v.size(); ++c) v[c] = ((v[c] - factor * b[c]) % p + p) % p;
    }
    return v;
}

}  // namespace cacti::graded
