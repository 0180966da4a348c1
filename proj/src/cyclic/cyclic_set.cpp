#include "cacti/cyclic/cyclic_set.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cacti::cyclic {

CyclicSet::CyclicSet(std::vector<int> order) : order_(std::move(order)) {
    std::set<int> uniq(order_.begin(), order_.end());
    if (uniq.size() != order_.size()) throw std::invalid_argument("cyclic set: repeated element");
    if (order_.empty()) return;
    // rotate so the smallest element comes first
    auto it = std::min_element(order_.begin(), order_.end());
    std::rotate(order_.begin(), it, order_.end());
}

int CyclicSet::position(int x) const {
    for (size_t i = 0; i < order_.size(); ++i)
        if (order_[i] == x) return static_cast<int>(i);
    throw std::out_of_range("cyclic set: no such element");
}

bool CyclicSet::anticlockwise(int x, int y, int z) const {
    if (x == y || y == z || x == z) return false;
    int px = position(x), py = position(y), pz = position(z);
    auto between = [&](int a, int b, int c) {  // b strictly between a and c going forward
        int d1 = ((b - a) % size() + size()) % size();
        int d2 = ((c - a) % size() + size()) % size();
        return 0 < d1 && d1 < d2;
    };
    return between(px, py, pz);
}

bool is_cyclic_morphism(const CyclicSet& src, const CyclicSet& dst, const CyclicMap& f) {
    if (static_cast<int>(f.images.size()) != src.size()) return false;
    int n = src.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int x = src.order()[i], y = src.order()[j], z = src.order()[k];
                if (!src.anticlockwise(x, y, z)) continue;
                int fx = f.images[i], fy = f.images[j], fz = f.images[k];
                if (fx == fy || fy == fz || fx == fz) continue;  // collapse clause
                if (!dst.anticlockwise(fx, fy, fz)) return false;
            }
    return true;
}

std::vector<CyclicMap> hom_enum(const CyclicSet& src, const CyclicSet& dst, int size_bound) {
    if (src.size() > size_bound || dst.size() > size_bound)
        throw std::invalid_argument("hom_enum: size bound exceeded");
    std::vector<CyclicMap> out;
    CyclicMap f;
    f.images.assign(src.size(), 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == src.size()) {
            if (is_cyclic_morphism(src, dst, f)) out.push_back(f);
            return;
        }
        for (int v : dst.order()) {
            f.images[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::optional<CyclicMap> compose_maps(const CyclicSet& a, const CyclicSet& b, const CyclicSet& c,
                                      const CyclicMap& f, const CyclicMap& g) {
    if (static_cast<int>(f.images.size()) != a.size() ||
        static_cast<int>(g.images.size()) != b.size())
        return std::nullopt;
    CyclicMap h;
    h.images.reserve(a.size());
    for (int i = 0; i < a.size(); ++i) {
        int mid = f.images[i];
        int pos = -1;
        for (int j = 0; j < b.size(); ++j)
            if (b.order()[j] == mid) pos = j;
        if (pos < 0) return std::nullopt;
        h.images.push_back(g.images[pos]);
    }
    (void)c;
    return h;
}

bool is_equivariant_cyclic_set(const CyclicSet& q, int n) {
    if (n <= 0 || q.size() % n != 0) return false;
    int step = q.size() / n;
    // rotation by `step` generates the action; freeness needs step > 0 orbits
    // of full size, which rotation always gives on distinct elements
    CyclicMap rot;
    rot.images.resize(q.size());
    for (int i = 0; i < q.size(); ++i) rot.images[i] = q.order()[(i + step) % q.size()];
    if (!is_cyclic_morphism(q, q, rot)) return false;
    // orbit maps Z/n -> Q: i -> sigma^i(x) must be cyclic morphisms
    std::vector<int> zn_order(n);
    for (int i = 0; i < n; ++i) zn_order[i] = i;
    CyclicSet zn(zn_order);
    for (int x = 0; x < q.size(); ++x) {
        CyclicMap orbit;
        for (int i = 0; i < n; ++i) orbit.images.push_back(q.order()[(x + i * step) % q.size()]);
        if (!is_cyclic_morphism(zn, q, orbit)) return false;
    }
    return true;
}

}  // namespace cacti::cyclic
