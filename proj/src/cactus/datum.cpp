#include "cacti/cactus/datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cacti::cactus {

Rational parse_rational(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

bool operator==(const CactusDatum& a, const CactusDatum& b) {
    return a.breakpoints == b.breakpoints && a.classes == b.classes;
}

void CactusDatum::canonicalize() {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

bool operator==(const LabelledCactus& a, const LabelledCactus& b) {
    return a.datum == b.datum && a.labels == b.labels;
}

std::vector<Violation> validate(const CactusDatum& datum) {
    std::vector<Violation> out;
    const auto& t = datum.breakpoints;
    int n = static_cast<int>(t.size()) - 1;
    if (n < 1) {
        out.push_back({"breakpoints", "need at least two breakpoints"});
        return out;
    }
    if (t.front() != 0 || t.back() != 1) out.push_back({"breakpoints", "must start at 0 and end at 1"});
    for (int i = 0; i + 1 < static_cast<int>(t.size()); ++i)
        if (!(t[i] < t[i + 1])) out.push_back({"breakpoints", "not strictly increasing"});

    std::vector<int> owner(n + 1, -1);
    for (size_t c = 0; c < datum.classes.size(); ++c) {
        for (int idx : datum.classes[c]) {
            if (idx < 0 || idx > n) {
                out.push_back({"classes", "index out of range"});
                continue;
            }
            if (owner[idx] != -1) out.push_back({"classes", "index repeated across classes"});
            owner[idx] = static_cast<int>(c);
        }
    }
    for (int i = 0; i <= n; ++i)
        if (owner[i] == -1) out.push_back({"classes", "index " + std::to_string(i) + " unassigned"});
    if (!out.empty()) return out;

    for (const auto& c : datum.classes)
        if (c.size() < 2) out.push_back({"class-size", "equivalence class with one element"});
    if (owner[0] != owner[n]) out.push_back({"endpoints", "0 and 1 not equivalent"});

    // pairwise nesting/disjointness: exactly one of (a)-(d) must hold
    for (size_t a = 0; a < datum.classes.size(); ++a) {
        for (size_t b = a + 1; b < datum.classes.size(); ++b) {
            const auto& E1 = datum.classes[a];
            const auto& E2 = datum.classes[b];
            int holds = 0;
            // (a): E1 fits inside a gap of E2
            for (size_t s = 0; s + 1 < E2.size(); ++s)
                if (E2[s] < E1.front() && E1.back() < E2[s + 1]) {
                    ++holds;
                    break;
                }
            for (size_t s = 0; s + 1 < E1.size(); ++s)
                if (E1[s] < E2.front() && E2.back() < E1[s + 1]) {
                    ++holds;
                    break;
                }
            if (E1.back() < E2.front()) ++holds;
            if (E2.back() < E1.front()) ++holds;
            if (holds != 1)
                out.push_back({"interleaving",
                               "classes " + std::to_string(a) + " and " + std::to_string(b) +
                                   (holds == 0 ? " interleave" : " satisfy several conditions")});
        }
    }
    return out;
}

std::vector<CactusLoop> loops(const CactusDatum& datum) {
    auto violations = validate(datum);
    if (!violations.empty())
        throw std::invalid_argument("loops: invalid cactus datum: " + violations.front().rule +
                                    ": " + violations.front().detail);
    int n = datum.segments();
    std::vector<int> owner(n + 1);
    for (size_t c = 0; c < datum.classes.size(); ++c)
        for (int idx : datum.classes[c]) owner[idx] = static_cast<int>(c);

    std::vector<CactusLoop> out;
    for (size_t c = 0; c < datum.classes.size(); ++c) {
        const auto& E = datum.classes[c];
        for (size_t s = 0; s + 1 < E.size(); ++s) {
            CactusLoop loop;
            loop.class_id = static_cast<int>(c);
            loop.s = static_cast<int>(s) + 1;
            int from = E[s], to = E[s + 1];
            for (int j = from; j < to; ++j) {
                // keep [t_j, t_{j+1}] iff no equivalence crosses the cut at j+1..
                bool crossed = false;
                for (int p = from; p <= j && !crossed; ++p)
                    for (int q = j + 1; q < to && !crossed; ++q)
                        if (owner[p] == owner[q]) crossed = true;
                if (!crossed) {
                    loop.edges.push_back(j);
                    loop.length += datum.breakpoints[j + 1] - datum.breakpoints[j];
                }
            }
            if (loop.edges.empty()) throw std::logic_error("loops: empty loop");
            out.push_back(std::move(loop));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CactusLoop& a, const CactusLoop& b) { return a.edges.front() < b.edges.front(); });
    return out;
}

LabelledCactus make_labelled(CactusDatum datum) {
    datum.canonicalize();
    LabelledCactus c;
    c.datum = std::move(datum);
    c.labels.resize(loops(c.datum).size());
    std::iota(c.labels.begin(), c.labels.end(), 1);
    return c;
}

LabelledCactus relabel(const LabelledCactus& c, const std::vector<int>& perm) {
    if (perm.size() != c.labels.size()) throw std::invalid_argument("relabel: size mismatch");
    LabelledCactus out = c;
    for (auto& l : out.labels) l = perm[l - 1];
    std::vector<bool> seen(out.labels.size(), false);
    for (int l : out.labels) {
        if (l < 1 || l > static_cast<int>(out.labels.size()) || seen[l - 1])
            throw std::invalid_argument("relabel: not a bijection");
        seen[l - 1] = true;
    }
    return out;
}

int euler_characteristic(const CactusDatum& datum) {
    int v = static_cast<int>(datum.classes.size());
    int e = datum.segments();
    int l = static_cast<int>(loops(datum).size());
    return v - e + l;
}

namespace {

// position in [0,1] of arc-length x along the loop's edges
Rational walk(const CactusDatum& datum, const CactusLoop& loop, const Rational& x) {
    Rational acc = 0;
    for (int j : loop.edges) {
        Rational len = datum.breakpoints[j + 1] - datum.breakpoints[j];
        if (x <= acc + len) return datum.breakpoints[j] + (x - acc);
        acc += len;
    }
    throw std::logic_error("walk: arc length beyond loop");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LabelledCactus compose(const LabelledCactus& outer, int slot, const LabelledCactus& inner) {
    if (slot < 1 || slot > outer.arity()) throw std::invalid_argument("compose: bad slot");
    std::vector<CactusLoop> outer_loops = loops(outer.datum);
    int loop_idx = -1;
    for (size_t i = 0; i < outer.labels.size(); ++i)
        if (outer.labels[i] == slot) loop_idx = static_cast<int>(i);
    const CactusLoop& lp = outer_loops[loop_idx];

    // T union h^{-1}(S)
    std::set<Rational> points(outer.datum.breakpoints.begin(), outer.datum.breakpoints.end());
    for (const auto& s : inner.datum.breakpoints) points.insert(walk(outer.datum, lp, s * lp.length));
    std::vector<Rational> t(points.begin(), points.end());
    std::map<Rational, int> index;
    for (size_t i = 0; i < t.size(); ++i) index[t[i]] = static_cast<int>(i);

    // equivalence generated by the outer classes and the pulled-back inner classes
    UnionFind uf(static_cast<int>(t.size()));
    for (const auto& cls : outer.datum.classes)
        for (size_t i = 1; i < cls.size(); ++i)
            uf.unite(index.at(outer.datum.breakpoints[cls[0]]),
                     index.at(outer.datum.breakpoints[cls[i]]));
    for (const auto& cls : inner.datum.classes) {
        int rep = index.at(walk(outer.datum, lp, inner.datum.breakpoints[cls[0]] * lp.length));
        for (size_t i = 1; i < cls.size(); ++i)
            uf.unite(rep, index.at(walk(outer.datum, lp, inner.datum.breakpoints[cls[i]] * lp.length)));
    }

    CactusDatum result;
    result.breakpoints = t;
    std::map<int, std::vector<int>> grouped;
    for (size_t i = 0; i < t.size(); ++i) grouped[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    for (auto& [root, members] : grouped) result.classes.push_back(members);
    result.canonicalize();

    auto violations = validate(result);
    if (!violations.empty())
        throw std::logic_error("compose: invalid result: " + violations.front().detail);

    // relabel: inner loops take slot..slot+arity(inner)-1, higher outer labels shift
    std::vector<CactusLoop> new_loops = loops(result);
    std::vector<CactusLoop> inner_loops = loops(inner.datum);
    std::set<int> inserted_edges(lp.edges.begin(), lp.edges.end());

    // arc-length offsets of the loop's edges, for mapping back through h
    std::map<int, Rational> edge_offset;
    {
        Rational acc = 0;
        for (int j : lp.edges) {
            edge_offset[j] = acc;
            acc += outer.datum.breakpoints[j + 1] - outer.datum.breakpoints[j];
        }
    }

    LabelledCactus out;
    out.datum = result;
    out.labels.assign(new_loops.size(), 0);
    for (size_t li = 0; li < new_loops.size(); ++li) {
        int assigned = 0;
        for (int edge : new_loops[li].edges) {
            // the original outer edge containing this (refined) edge
            const Rational& lo_pt = result.breakpoints[edge];
            int orig = -1;
            for (int j = 0; j < outer.datum.segments(); ++j)
                if (outer.datum.breakpoints[j] <= lo_pt && lo_pt < outer.datum.breakpoints[j + 1]) {
                    orig = j;
                    break;
                }
            int label;
            if (!inserted_edges.count(orig)) {
                int owner_loop = -1;
                for (size_t ol = 0; ol < outer_loops.size(); ++ol)
                    for (int j : outer_loops[ol].edges)
                        if (j == orig) owner_loop = static_cast<int>(ol);
                int l = outer.labels[owner_loop];
                label = l < slot ? l : l + inner.arity() - 1;
                if (l == slot) throw std::logic_error("compose: edge of the replaced loop escaped");
            } else {
                // midpoint through h into inner coordinates
                Rational mid = (lo_pt + result.breakpoints[edge + 1]) / 2;
                Rational arc = edge_offset.at(orig) + (mid - outer.datum.breakpoints[orig]);
                Rational inner_pos = arc / lp.length;
                int iorig = -1;
                for (int j = 0; j < inner.datum.segments(); ++j)
                    if (inner.datum.breakpoints[j] <= inner_pos &&
                        inner_pos < inner.datum.breakpoints[j + 1]) {
                        iorig = j;
                        break;
                    }
                int owner_loop = -1;
                for (size_t il = 0; il < inner_loops.size(); ++il)
                    for (int j : inner_loops[il].edges)
                        if (j == iorig) owner_loop = static_cast<int>(il);
                if (owner_loop < 0) throw std::logic_error("compose: inner edge not in any loop");
                label = slot - 1 + inner.labels[owner_loop];
            }
            if (assigned && assigned != label)
                throw std::logic_error("compose: loop maps to two origin loops");
            assigned = label;
        }
        out.labels[li] = assigned;
    }
    std::vector<bool> seen(out.labels.size(), false);
    for (int l : out.labels) {
        if (l < 1 || l > static_cast<int>(out.labels.size()) || seen[l - 1])
            throw std::logic_error("compose: relabeling is not a bijection");
        seen[l - 1] = true;
    }
    return out;
}

LabelledCactus unit_cactus() {
    CactusDatum d;
    d.breakpoints = {Rational(0), Rational(1)};
    d.classes = {{0, 1}};
    return make_labelled(std::move(d));
}

LabelledCactus corona(int n) {
    if (n < 1) throw std::invalid_argument("corona arity");
    CactusDatum d;
    std::vector<int> all;
    for (int i = 0; i <= n; ++i) {
        d.breakpoints.push_back(frac(i, n));
        all.push_back(i);
    }
    d.classes = {all};
    return make_labelled(std::move(d));
}

LabelledCactus two_lobed(const Rational& s, const Rational& t) {
    if (!(0 < s && s < t && t < 1)) throw std::invalid_argument("two_lobed: need 0 < s < t < 1");
    CactusDatum d;
    d.breakpoints = {Rational(0), s, t, Rational(1)};
    d.classes = {{0, 3}, {1, 2}};
    return make_labelled(std::move(d));
}

std::string to_json(const LabelledCactus& c) {
    nlohmann::ordered_json j;
    for (const auto& b : c.datum.breakpoints) j["breakpoints"].push_back(rational_str(b));
    for (const auto& cls : c.datum.classes) j["classes"].push_back(cls);
    nlohmann::ordered_json labels;
    for (size_t i = 0; i < c.labels.size(); ++i) labels[std::to_string(i + 1)] = c.labels[i];
    j["labels"] = labels;
    return j.dump();
}

LabelledCactus cactus_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CactusDatum d;
    for (const auto& b : j.at("breakpoints")) d.breakpoints.push_back(parse_rational(b.get<std::string>()));
    for (const auto& cls : j.at("classes")) d.classes.push_back(cls.get<std::vector<int>>());
    d.canonicalize();
    LabelledCactus c;
    c.datum = std::move(d);
    size_t arity = loops(c.datum).size();
    c.labels.assign(arity, 0);
    if (j.contains("labels")) {
        for (const auto& [key, value] : j.at("labels").items())
            c.labels.at(std::stoul(key) - 1) = value.get<int>();
    } else {
        std::iota(c.labels.begin(), c.labels.end(), 1);
    }
    return c;
}

}  // namespace cacti::cactus
