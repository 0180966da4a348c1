#include "cacti/cyclic/finite_algebra.hpp"

#include <stdexcept>

#include "json.hpp"

namespace cacti::cyclic {

FiniteAlgebra::FiniteAlgebra(int p, std::vector<std::string> basis_names,
                             std::vector<std::vector<std::vector<int>>> structure, int unit_index)
    : p_(p), unit_(unit_index), names_(std::move(basis_names)), c_(std::move(structure)) {
    int n = dim();
    if (static_cast<int>(c_.size()) != n) throw std::invalid_argument("structure constants shape");
    for (auto& row : c_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("structure constants shape");
        for (auto& cell : row) {
            if (static_cast<int>(cell.size()) != n)
                throw std::invalid_argument("structure constants shape");
            for (auto& v : cell) v = ((v % p) + p) % p;
        }
    }
    // unitality
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int want = (k == i) ? 1 : 0;
            if (c_[unit_][i][k] != want || c_[i][unit_][k] != want)
                throw std::invalid_argument("structure constants: unit fails");
        }
    // associativity: (e_i e_j) e_l == e_i (e_j e_l)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m < n; ++m) {
                    long long lhs = 0, rhs = 0;
                    for (int k = 0; k < n; ++k) {
                        lhs += static_cast<long long>(c_[i][j][k]) * c_[k][l][m];
                        rhs += static_cast<long long>(c_[j][l][k]) * c_[i][k][m];
                    }
                    if (((lhs - rhs) % p + p) % p != 0)
                        throw std::invalid_argument("structure constants: associativity fails");
                }
}

std::vector<int> FiniteAlgebra::multiply(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> out(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < dim(); ++j) {
            if (!b[j]) continue;
            long long f = static_cast<long long>(a[i]) * b[j];
            for (int k = 0; k < dim(); ++k)
                out[k] = static_cast<int>((out[k] + f * c_[i][j][k]) % p_);
        }
    }
    return out;
}

FiniteAlgebra FiniteAlgebra::truncated_polynomial(int p, int height) {
    int n = height;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    std::vector structure(n, std::vector(n, std::vector<int>(n, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) structure[i][j][i + j] = 1;
    return FiniteAlgebra(p, names, structure, 0);
}

FiniteAlgebra FiniteAlgebra::ground_field(int p) {
    return truncated_polynomial(p, 1);
}

FiniteAlgebra FiniteAlgebra::monoid_algebra(int p, const std::vector<std::vector<int>>& cayley,
                                            int unit_elt) {
    int n = static_cast<int>(cayley.size());
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("m" + std::to_string(i));
    std::vector structure(n, std::vector(n, std::vector<int>(n, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) structure[i][j][cayley[i][j]] = 1;
    return FiniteAlgebra(p, names, structure, unit_elt);
}

FiniteAlgebra FiniteAlgebra::from_json(int p, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
    int n = static_cast<int>(names.size());
    std::vector structure(n, std::vector(n, std::vector<int>(n, 0)));
    for (const auto& triple : j.at("products")) {
        // entries [i, j, k, c]: e_i e_j += c e_k
        structure.at(triple.at(0)).at(triple.at(1)).at(triple.at(2)) = triple.at(3);
    }
    int unit = j.value("unit", 0);
    return FiniteAlgebra(p, names, structure, unit);
}

bool FiniteMonoid::valid() const {
    int n = size();
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) return false;
        for (int v : row)
            if (v < 0 || v >= n) return false;
    }
    for (int i = 0; i < n; ++i)
        if (table[unit][i] != i || table[i][unit] != i) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) return false;
    return true;
}

std::vector<FiniteMonoid> all_monoids(int order) {
    if (order > 4) throw std::invalid_argument("all_monoids: order too large");
    std::vector<FiniteMonoid> out;
    int n = order;
    // fix the unit as element 0; enumerate the free (n-1)x(n-1) block
    int cells = (n - 1) * (n - 1);
    std::vector<int> choice(cells, 0);
    while (true) {
        FiniteMonoid m;
        m.unit = 0;
        m.table.assign(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            m.table[0][i] = i;
            m.table[i][0] = i;
        }
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) m.table[i][j] = choice[(i - 1) * (n - 1) + (j - 1)];
        if (m.valid()) out.push_back(m);
        // increment
        int pos = 0;
        while (pos < cells) {
            if (++choice[pos] < n) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == cells) break;
    }
    return out;
}

}  // namespace cacti::cyclic
