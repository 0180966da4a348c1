#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace cacti::cactus {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Partition 0 = t_0 < t_1 < ... < t_n = 1 with an equivalence relation on
// the breakpoint indices. Valid data satisfy the three cactus conditions.
struct CactusDatum {
    std::vector<Rational> breakpoints;       // includes 0 and 1
    std::vector<std::vector<int>> classes;   // partition of {0..n}, each sorted

    int segments() const { return static_cast<int>(breakpoints.size()) - 1; }
    friend bool operator==(const CactusDatum&, const CactusDatum&);
    void canonicalize();  // sort classes by smallest element
};

struct Violation {
    std::string rule;
    std::string detail;
};

// empty result means the datum is valid
std::vector<Violation> validate(const CactusDatum& datum);

struct CactusLoop {
    int class_id = 0;
    int s = 0;                // 1 <= s < class size
    std::vector<int> edges;   // indices j of intervals [t_j, t_{j+1}]
    Rational length = 0;
};

std::vector<CactusLoop> loops(const CactusDatum& datum);

struct LabelledCactus {
    CactusDatum datum;
    std::vector<int> labels;  // labels[i] = label of loops(datum)[i], a bijection onto 1..arity

    int arity() const { return static_cast<int>(labels.size()); }
    friend bool operator==(const LabelledCactus&, const LabelledCactus&);
};

LabelledCactus make_labelled(CactusDatum datum);  // identity labeling
LabelledCactus relabel(const LabelledCactus& c, const std::vector<int>& perm);  // label l -> perm[l-1]

// insert inner into loop slot (1-based label) of outer
LabelledCactus compose(const LabelledCactus& outer, int slot, const LabelledCactus& inner);

int euler_characteristic(const CactusDatum& datum);

// canned cacti used by the property suite and the CLI examples
LabelledCactus unit_cactus();
LabelledCactus corona(int n);
LabelledCactus two_lobed(const Rational& s, const Rational& t);

std::string to_json(const LabelledCactus& c);
LabelledCactus cactus_from_json(const std::string& text);

}  // namespace cacti::cactus
