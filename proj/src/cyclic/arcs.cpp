#include "cacti/cyclic/arcs.hpp"

#include <algorithm>
#include <stdexcept>

namespace cacti::cyclic {

Rational mod1(const Rational& q) {
    Rational r = q;
    while (r < 0) r += 1;
    while (r >= 1) r -= 1;
    return r;
}

Rational Arc::end() const {
    return mod1(start + length);
}

ArcConfiguration make_config(std::vector<Arc> arcs) {
    ArcConfiguration c;
    for (auto& a : arcs) a.start = mod1(a.start);
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.start < b.start; });
    c.arcs = std::move(arcs);
    std::string why;
    if (!config_valid(c, &why)) throw std::invalid_argument("arc configuration: " + why);
    return c;
}

bool config_valid(const ArcConfiguration& c, std::string* why) {
    Rational total = 0;
    for (const auto& a : c.arcs) {
        if (a.length <= 0) {
            if (why) *why = "arc of non-positive length";
            return false;
        }
        total += a.length;
    }
    if (total >= 1) {
        if (why) *why = "arcs cover the whole circle";
        return false;
    }
    // interiors disjoint: consecutive arcs (sorted by start) must not overlap
    int n = static_cast<int>(c.arcs.size());
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n && !(c.arcs[i].start < c.arcs[i + 1].start)) {
            if (why) *why = "repeated start";
            return false;
        }
        const Arc& a = c.arcs[i];
        const Arc& b = c.arcs[(i + 1) % n];
        // distance from a.start to b.start going counterclockwise
        Rational gap = mod1(b.start - a.start);
        if (n > 1 && a.length > gap) {
            if (why) *why = "arc interiors overlap";
            return false;
        }
        if (n == 1 && a.length >= 1) {
            if (why) *why = "single arc covers the circle";
            return false;
        }
    }
    return true;
}

ArcConfiguration arc_merge(const ArcConfiguration& c, const Rational& start) {
    int n = static_cast<int>(c.arcs.size());
    int idx = -1;
    for (int i = 0; i < n; ++i)
        if (c.arcs[i].start == mod1(start)) idx = i;
    if (idx < 0) throw std::invalid_argument("arc_merge: no arc at given start");
    if (n < 2) throw std::invalid_argument("arc_merge: nothing to merge with");
    int next = -1;
    for (int i = 0; i < n; ++i)
        if (i != idx && c.arcs[i].start == c.arcs[idx].end()) next = i;
    if (next < 0) throw std::invalid_argument("arc_merge: counterclockwise end touches no arc");

    Arc merged;
    merged.start = c.arcs[idx].start;
    merged.length = c.arcs[idx].length + c.arcs[next].length;
    merged.label = c.arcs[idx].label;
    for (const auto& s : c.arcs[next].label) merged.label.push_back(s);

    std::vector<Arc> rest;
    for (int i = 0; i < n; ++i)
        if (i != idx && i != next) rest.push_back(c.arcs[i]);
    rest.push_back(merged);
    return make_config(std::move(rest));
}

ArcConfiguration arc_normalize(const ArcConfiguration& c) {
    ArcConfiguration cur = c;
    bool merged = true;
    while (merged) {
        merged = false;
        int n = static_cast<int>(cur.arcs.size());
        if (n < 2) break;
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            if (cur.arcs[i].end() == cur.arcs[j].start) {
                cur = arc_merge(cur, cur.arcs[i].start);
                merged = true;
                break;
            }
        }
    }
    return cur;
}

std::vector<CollapsedLetter> collapse(const ArcConfiguration& c, const Rational& basepoint) {
    Rational b = mod1(basepoint);
    Rational total_arc = 0;
    for (const auto& a : c.arcs) total_arc += a.length;
    Rational free_length = 1 - total_arc;

    // basepoint must lie strictly inside the complement
    for (const auto& a : c.arcs) {
        Rational offset = mod1(b - a.start);
        if (offset <= a.length)
            throw std::invalid_argument("collapse: basepoint inside an arc");
    }

    std::vector<CollapsedLetter> out;
    for (const auto& a : c.arcs) {
        // gap length strictly before this arc, walking counterclockwise from b
        Rational walk = mod1(a.start - b);
        Rational consumed_by_arcs = 0;
        for (const auto& other : c.arcs) {
            Rational rel = mod1(other.start - b);
            if (rel < walk) consumed_by_arcs += other.length;
        }
        CollapsedLetter letter;
        letter.label = a.label;
        letter.position = (walk - consumed_by_arcs) / free_length;
        out.push_back(std::move(letter));
    }
    std::sort(out.begin(), out.end(),
              [](const CollapsedLetter& a, const CollapsedLetter& b) { return a.position < b.position; });
    return out;
}

TwistingWitness twisting_witness() {
    using cacti::cactus::frac;
    TwistingWitness w;
    Arc a{frac(1, 8), frac(1, 8), {"A"}};
    Arc b{frac(1, 2), frac(1, 8), {"B"}};
    w.config = make_config({a, b});
    w.b1 = Rational(0);
    w.b2 = frac(3, 8);
    w.word1 = collapse(w.config, w.b1);
    w.word2 = collapse(w.config, w.b2);
    return w;
}

}  // namespace cacti::cyclic
