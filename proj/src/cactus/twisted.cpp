#include "cacti/cactus/twisted.hpp"

#include <sstream>
#include <stdexcept>

namespace cacti::cactus {

TwistedTree twisted_leaf(int index) {
    TwistedTree t;
    t.is_leaf = true;
    t.leaf_index = index;
    return t;
}

TwistedTree twisted_node(std::vector<int> perm, int label, std::vector<TwistedTree> children) {
    TwistedTree t;
    t.perm = std::move(perm);
    t.label = label;
    t.children = std::move(children);
    if (t.perm.size() != t.children.size())
        throw std::invalid_argument("twisted_node: permutation size mismatch");
    return t;
}

int tree_arity(const TwistedTree& t) {
    if (t.is_leaf) return 1;
    int a = 0;
    for (const auto& c : t.children) a += tree_arity(c);
    return a;
}

namespace {

bool valid_rec(const TwistedTree& t, int modulus, int& next_leaf) {
    if (t.is_leaf) return t.leaf_index == next_leaf++;
    if (t.perm.size() != t.children.size()) return false;
    std::vector<bool> seen(t.perm.size(), false);
    for (int v : t.perm) {
        if (v < 1 || v > static_cast<int>(t.perm.size()) || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    if (t.label < 0 || t.label >= modulus) return false;
    if (t.children.size() <= 1 && t.label != 0) return false;  // erased labels
    for (const auto& c : t.children)
        if (!valid_rec(c, modulus, next_leaf)) return false;
    return true;
}

// splice child's permutation into the parent's at planar position j (0-based)
std::vector<int> compose_perms(const std::vector<int>& sigma, int j, const std::vector<int>& tau) {
    int k = static_cast<int>(sigma.size());
    int m = static_cast<int>(tau.size());
    int base = sigma[j];
    auto shift = [&](int v) { return v < base ? v : v + m - 1; };
    std::vector<int> nu;
    nu.reserve(k + m - 1);
    for (int x = 0; x < k; ++x) {
        if (x == j) {
            for (int g = 0; g < m; ++g) nu.push_back(base - 1 + tau[g]);
        } else {
            nu.push_back(shift(sigma[x]));
        }
    }
    return nu;
}

}  // namespace

bool tree_valid(const TwistedTree& t, int modulus) {
    int next = 1;
    return valid_rec(t, modulus, next);
}

TwistedTree tree_compose(const TwistedTree& outer, int slot, const TwistedTree& inner) {
    int n = tree_arity(outer), m = tree_arity(inner);
    if (slot < 1 || slot > n) throw std::invalid_argument("tree_compose: bad slot");
    // renumber leaves: inner block sits at slot..slot+m-1
    auto renumber = [&](auto&& self, const TwistedTree& t, int offset) -> TwistedTree {
        if (t.is_leaf) return twisted_leaf(t.leaf_index + offset);
        TwistedTree out = t;
        for (auto& c : out.children) c = self(self, c, offset);
        return out;
    };
    auto rec = [&](auto&& self, const TwistedTree& t) -> TwistedTree {
        if (t.is_leaf) {
            if (t.leaf_index == slot) return renumber(renumber, inner, slot - 1);
            if (t.leaf_index > slot) return twisted_leaf(t.leaf_index + m - 1);
            return t;
        }
        TwistedTree out = t;
        for (auto& c : out.children) c = self(self, c);
        return out;
    };
    return rec(rec, outer);
}

namespace {

// contract this node's edge to child at position j if labels permit
bool edge_contractible(const TwistedTree& parent, const TwistedTree& child) {
    if (child.is_leaf) return false;
    bool parent_wild = parent.children.size() <= 1;
    bool child_wild = child.children.size() <= 1;
    return parent_wild || child_wild || parent.label == child.label;
}

TwistedTree contract(const TwistedTree& parent, size_t j) {
    const TwistedTree& child = parent.children[j];
    TwistedTree out;
    out.perm = compose_perms(parent.perm, static_cast<int>(j), child.perm);
    bool parent_wild = parent.children.size() <= 1;
    out.label = parent_wild ? child.label : parent.label;
    for (size_t x = 0; x < parent.children.size(); ++x) {
        if (x == j)
            for (const auto& g : child.children) out.children.push_back(g);
        else
            out.children.push_back(parent.children[x]);
    }
    if (out.children.size() <= 1) out.label = 0;
    return out;
}

}  // namespace

TwistedTree tree_reduce(const TwistedTree& t, int modulus) {
    if (t.is_leaf) return t;
    TwistedTree out = t;
    for (auto& c : out.children) c = tree_reduce(c, modulus);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = 0; j < out.children.size(); ++j) {
            if (edge_contractible(out, out.children[j])) {
                out = contract(out, j);
                changed = true;
                break;
            }
        }
    }
    if (out.children.size() <= 1) out.label = 0;
    if (out.label >= modulus || out.label < 0) out.label = ((out.label % modulus) + modulus) % modulus;
    return out;
}

bool tree_equal(const TwistedTree& a, const TwistedTree& b, int modulus) {
    return tree_reduce(a, modulus) == tree_reduce(b, modulus);
}

TwistedTree tree_rotate(const TwistedTree& t, int delta, int modulus) {
    if (t.is_leaf) return t;
    TwistedTree out = t;
    if (out.children.size() > 1) out.label = ((out.label + delta) % modulus + modulus) % modulus;
    for (auto& c : out.children) c = tree_rotate(c, delta, modulus);
    return out;
}

std::string tree_str(const TwistedTree& t) {
    if (t.is_leaf) return "L" + std::to_string(t.leaf_index);
    std::ostringstream os;
    os << "(s=[";
    for (size_t i = 0; i < t.perm.size(); ++i) {
        if (i) os << ",";
        os << t.perm[i];
    }
    os << "],t=" << t.label << ";";
    for (size_t i = 0; i < t.children.size(); ++i) {
        if (i) os << ",";
        os << tree_str(t.children[i]);
    }
    os << ")";
    return os.str();
}

std::vector<TwistedTree> one_step_reductions(const TwistedTree& t, int modulus) {
    std::vector<TwistedTree> out;
    if (t.is_leaf) return out;
    for (size_t j = 0; j < t.children.size(); ++j) {
        if (edge_contractible(t, t.children[j])) out.push_back(contract(t, j));
        // reductions inside the j-th subtree
        for (const auto& sub : one_step_reductions(t.children[j], modulus)) {
            TwistedTree copy = t;
            copy.children[j] = sub;
            out.push_back(copy);
        }
    }
    return out;
}

}  // namespace cacti::cactus
