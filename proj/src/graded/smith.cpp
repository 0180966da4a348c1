#include "cacti/graded/smith.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cacti::graded {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); }

}  // namespace

SmithResult IntMatrix::smith() const {
    int n = rows_, m = cols_;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) a[i][j] = at(i, j);
    std::vector<std::vector<long long>> u(n, std::vector<long long>(n, 0));
    std::vector<std::vector<long long>> v(m, std::vector<long long>(m, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    for (int j = 0; j < m; ++j) v[j][j] = 1;

    auto row_op = [&](int r1, int r2, long long f) {  // r1 -= f*r2
        for (int j = 0; j < m; ++j) a[r1][j] -= f * a[r2][j];
        for (int j = 0; j < n; ++j) u[r1][j] -= f * u[r2][j];
    };
    auto col_op = [&](int c1, int c2, long long f) {  // c1 -= f*c2
        for (int i = 0; i < n; ++i) a[i][c1] -= f * a[i][c2];
        for (int i = 0; i < m; ++i) v[i][c1] -= f * v[i][c2];
    };
    auto row_swap = [&](int r1, int r2) {
        std::swap(a[r1], a[r2]);
        std::swap(u[r1], u[r2]);
    };
    auto col_swap = [&](int c1, int c2) {
        for (int i = 0; i < n; ++i) std::swap(a[i][c1], a[i][c2]);
        for (int i = 0; i < m; ++i) std::swap(v[i][c1], v[i][c2]);
    };

    int t = 0;
    while (t < n && t < m) {
        // find pivot with minimal |value|
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j)
                if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                    best = std::llabs(a[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);
        bool clean = true;
        for (int i = t + 1; i < n; ++i) {
            long long q = a[i][t] / a[t][t];
            if (q) row_op(i, t, q);
            if (a[i][t]) clean = false;
        }
        for (int j = t + 1; j < m; ++j) {
            long long q = a[t][j] / a[t][t];
            if (q) col_op(j, t, q);
            if (a[t][j]) clean = false;
        }
        if (!clean) continue;  // remainder left; repeat with smaller pivot
        // divisibility fix-up: pivot must divide the rest
        bool fixed = true;
        for (int i = t + 1; i < n && fixed; ++i)
            for (int j = t + 1; j < m && fixed; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_op(t, i, -1);  // add row i to row t, then redo
                    fixed = false;
                }
        if (!fixed) continue;
        if (a[t][t] < 0) {
            for (int j = 0; j < m; ++j) a[t][j] = -a[t][j];
            for (int j = 0; j < n; ++j) u[t][j] = -u[t][j];
        }
        ++t;
    }

    SmithResult res;
    for (int i = 0; i < t; ++i) res.divisors.push_back(a[i][i]);
    res.left = std::move(u);
    res.right = std::move(v);
    return res;
}

std::vector<long long> IntMatrix::cokernel_orders(long long modulus) const {
    if (modulus == 0) {
        SmithResult s = smith();
        std::vector<long long> orders;
        for (long long d : s.divisors)
            if (d != 1) orders.push_back(d);
        for (int i = static_cast<int>(s.divisors.size()); i < rows_; ++i)
            orders.push_back(0);  // free summand
        return orders;
    }
    // coker over Z/m: augment with m*identity rows' effect == coker of [A | m*I]
    IntMatrix aug(rows_, cols_ + rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = modulus;
    }
    SmithResult s = aug.smith();
    std::vector<long long> orders;
    for (long long d : s.divisors) {
        long long g = gcd_ll(d, modulus);
        if (g != 1) orders.push_back(g);
    }
    for (int i = static_cast<int>(s.divisors.size()); i < rows_; ++i) orders.push_back(modulus);
    return orders;
}

}  // namespace cacti::graded
