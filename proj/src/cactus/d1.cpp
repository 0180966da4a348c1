#include "cacti/cactus/d1.hpp"

#include <numeric>
#include <stdexcept>

namespace cacti::cactus {

IntervalPartition d1_unit() {
    return d1_make({Rational(0), Rational(1)});
}

IntervalPartition d1_make(const std::vector<Rational>& cuts) {
    IntervalPartition x;
    x.cuts = cuts;
    x.labels.resize(cuts.size() - 1);
    std::iota(x.labels.begin(), x.labels.end(), 1);
    if (!d1_valid(x)) throw std::invalid_argument("d1_make: bad cuts");
    return x;
}

bool d1_valid(const IntervalPartition& x) {
    if (x.cuts.size() < 2 || x.cuts.front() != 0 || x.cuts.back() != 1) return false;
    for (size_t i = 0; i + 1 < x.cuts.size(); ++i)
        if (!(x.cuts[i] < x.cuts[i + 1])) return false;
    if (x.labels.size() != x.cuts.size() - 1) return false;
    std::vector<bool> seen(x.labels.size(), false);
    for (int l : x.labels) {
        if (l < 1 || l > static_cast<int>(x.labels.size()) || seen[l - 1]) return false;
        seen[l - 1] = true;
    }
    return true;
}

IntervalPartition d1_compose(const IntervalPartition& outer, int slot,
                             const IntervalPartition& inner) {
    if (!d1_valid(outer) || !d1_valid(inner)) throw std::invalid_argument("d1_compose: invalid");
    if (slot < 1 || slot > outer.arity()) throw std::invalid_argument("d1_compose: bad slot");
    int pos = -1;
    for (size_t i = 0; i < outer.labels.size(); ++i)
        if (outer.labels[i] == slot) pos = static_cast<int>(i);

    Rational a = outer.cuts[pos], b = outer.cuts[pos + 1];
    IntervalPartition out;
    for (int i = 0; i <= pos; ++i) out.cuts.push_back(outer.cuts[i]);
    for (size_t i = 1; i + 1 < inner.cuts.size(); ++i) out.cuts.push_back(a + (b - a) * inner.cuts[i]);
    for (size_t i = pos + 1; i < outer.cuts.size(); ++i) out.cuts.push_back(outer.cuts[i]);

    int m = inner.arity();
    out.labels.assign(out.cuts.size() - 1, 0);
    for (size_t i = 0; i < outer.labels.size(); ++i) {
        int l = outer.labels[i];
        int relabelled = l < slot ? l : l + m - 1;
        if (static_cast<int>(i) < pos)
            out.labels[i] = relabelled;
        else if (static_cast<int>(i) > pos)
            out.labels[i + m - 1] = relabelled;
    }
    for (int i = 0; i < m; ++i) out.labels[pos + i] = slot - 1 + inner.labels[i];
    if (!d1_valid(out)) throw std::logic_error("d1_compose: invalid result");
    return out;
}

}  // namespace cacti::cactus
