#include "cacti/specseq/page.hpp"

#include <stdexcept>

#include "cacti/graded/fp_matrix.hpp"

namespace cacti::specseq {

using graded::FpMatrix;

void BigradedPage::add_class(int s, int n, const std::string& label) {
    basis_[{s, n}].push_back(label);
}

int BigradedPage::dim(int s, int n) const {
    auto it = basis_.find({s, n});
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& BigradedPage::labels(int s, int n) const {
    static const std::vector<std::string> empty;
    auto it = basis_.find({s, n});
    return it == basis_.end() ? empty : it->second;
}

void BigradedPage::add_diff(int s, int n, int from_index, int to_index, int coeff) {
    coeff = ((coeff % p_) + p_) % p_;
    if (coeff) diff_[{s, n}].push_back({from_index, to_index, coeff});
}

namespace {

FpMatrix matrix_of(const BigradedPage& page,
                   const std::map<std::pair<int, int>, std::vector<std::tuple<int, int, int>>>& diff,
                   int s, int n, int p, int s_shift) {
    FpMatrix m(page.dim(s + s_shift, n - 1), page.dim(s, n), p);
    auto it = diff.find({s, n});
    if (it != diff.end())
        for (const auto& [from, to, coeff] : it->second)
            m.set(to, from, (m.at(to, from) + coeff) % p);
    return m;
}

}  // namespace

bool BigradedPage::d_squared_is_zero() const {
    for (const auto& [key, entries] : diff_) {
        auto [s, n] = key;
        FpMatrix first = matrix_of(*this, diff_, s, n, p_, s_shift_);
        FpMatrix second = matrix_of(*this, diff_, s + s_shift_, n - 1, p_, s_shift_);
        FpMatrix comp = second.multiply(first);
        for (int r = 0; r < comp.rows(); ++r)
            for (int c = 0; c < comp.cols(); ++c)
                if (comp.at(r, c)) return false;
    }
    return true;
}

BigradedPage BigradedPage::homology() const {
    BigradedPage out(p_, page_ + 1, s_shift_);
    for (const auto& [key, labels] : basis_) {
        auto [s, n] = key;
        FpMatrix outgoing = matrix_of(*this, diff_, s, n, p_, s_shift_);
        FpMatrix incoming = matrix_of(*this, diff_, s - s_shift_, n + 1, p_, s_shift_);
        // cycles modulo boundaries, with representative tracking
        auto cycles = outgoing.kernel_basis();
        auto boundaries = incoming.image_basis();
        auto boundary_ech = graded::echelon_span(boundaries, p_);
        std::vector<std::vector<int>> ech = boundary_ech;
        for (const auto& z : cycles) {
            std::vector<int> rem = graded::reduce_against(z, ech, p_);
            int pivot = -1;
            for (size_t i = 0; i < rem.size(); ++i)
                if (rem[i]) {
                    pivot = static_cast<int>(i);
                    break;
                }
            if (pivot < 0) continue;
            ech.push_back(rem);
            ech = graded::echelon_span(std::move(ech), p_);
            out.add_class(s, n, labels[pivot]);
        }
    }
    return out;
}

}  // namespace cacti::specseq
