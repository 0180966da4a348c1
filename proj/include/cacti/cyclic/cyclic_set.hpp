#pragma once

#include <optional>
#include <vector>

namespace cacti::cyclic {

// Finite cyclically ordered set, stored as the rotation-minimal linear
// order of its elements (element ids are small ints).
class CyclicSet {
public:
    CyclicSet() = default;
    explicit CyclicSet(std::vector<int> order);

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }

    // true when (x, y, z) are pairwise distinct and appear in this cyclic
    // (anticlockwise) order
    bool anticlockwise(int x, int y, int z) const;

    friend bool operator==(const CyclicSet&, const CyclicSet&) = default;

private:
    std::vector<int> order_;
    int position(int x) const;
};

// f maps element at position i of src to dst element map[i]
struct CyclicMap {
    std::vector<int> images;  // indexed by position in src.order()
};

bool is_cyclic_morphism(const CyclicSet& src, const CyclicSet& dst, const CyclicMap& f);

// all morphisms src -> dst (bounded enumeration)
std::vector<CyclicMap> hom_enum(const CyclicSet& src, const CyclicSet& dst, int size_bound = 6);

std::optional<CyclicMap> compose_maps(const CyclicSet& a, const CyclicSet& b, const CyclicSet& c,
                                      const CyclicMap& f, const CyclicMap& g);  // g after f

// free order-preserving Z/n action: rotation by size/n steps must be a
// cyclic automorphism and each orbit map a morphism
bool is_equivariant_cyclic_set(const CyclicSet& q, int n);

}  // namespace cacti::cyclic
