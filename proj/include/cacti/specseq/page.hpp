#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace cacti::specseq {

// Sparse bigraded F_p module with labelled basis and a page differential.
// Keys are (filtration s, total degree n). The page-r differential moves
// (s, n) -> (s + s_shift, n - 1) with a fixed filtration shift.
class BigradedPage {
public:
    BigradedPage(int p, int page_number, int filtration_shift)
        : p_(p), page_(page_number), s_shift_(filtration_shift) {}

    int prime() const { return p_; }
    int page_number() const { return page_; }
    int filtration_shift() const { return s_shift_; }

    void add_class(int s, int n, const std::string& label);
    int dim(int s, int n) const;
    const std::vector<std::string>& labels(int s, int n) const;

    // coefficient of target basis element `to` in d(from)
    void add_diff(int s, int n, int from_index, int to_index, int coeff);

    bool d_squared_is_zero() const;
    // homology at every bidegree; representative labels are kept for the
    // surviving classes (quotient classes are labelled by their reps)
    BigradedPage homology() const;

    const std::map<std::pair<int, int>, std::vector<std::string>>& basis() const { return basis_; }

private:
    int p_, page_, s_shift_;
    std::map<std::pair<int, int>, std::vector<std::string>> basis_;
    // (s, n) -> matrix entries (from, to, coeff) into (s + shift, n - 1)
    std::map<std::pair<int, int>, std::vector<std::tuple<int, int, int>>> diff_;
};

}  // namespace cacti::specseq
