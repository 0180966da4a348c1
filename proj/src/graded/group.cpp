#include "cacti/graded/group.hpp"

#include <algorithm>
#include <sstream>

namespace cacti::graded {

std::string Summand::str(int prime) const {
    switch (kind) {
        case Kind::Free: return "Z";
        case Kind::Padic: return "Zp";
        case Kind::Cyclic: {
            long long order = 1;
            for (int i = 0; i < exponent; ++i) order *= prime;
            return std::to_string(order);
        }
    }
    return "?";
}

void GradedGroup::add(int degree, Summand s) {
    auto& v = entries_[degree];
    v.insert(std::upper_bound(v.begin(), v.end(), s), s);
}

void GradedGroup::add_cyclic(int degree, int exponent, int copies) {
    for (int i = 0; i < copies; ++i) add(degree, Summand::cyclic(exponent));
}

const std::vector<Summand>& GradedGroup::at(int degree) const {
    static const std::vector<Summand> empty;
    auto it = entries_.find(degree);
    return it == entries_.end() ? empty : it->second;
}

GradedGroup GradedGroup::shifted(int amount) const {
    GradedGroup out(prime_);
    for (const auto& [d, v] : entries_)
        for (const auto& s : v) out.add(d + amount, s);
    return out;
}

GradedGroup GradedGroup::direct_sum(const GradedGroup& other) const {
    if (prime_ != other.prime_) throw std::invalid_argument("direct_sum: prime mismatch");
    GradedGroup out = *this;
    for (const auto& [d, v] : other.entries_)
        for (const auto& s : v) out.add(d, s);
    return out;
}

GradedGroup GradedGroup::tensor(const GradedGroup& other, int lo, int hi) const {
    if (prime_ != other.prime_) throw std::invalid_argument("tensor: prime mismatch");
    GradedGroup out(prime_);
    for (const auto& [d1, v1] : entries_) {
        for (const auto& [d2, v2] : other.entries_) {
            int d = d1 + d2;
            if (d < lo || d > hi) continue;
            for (const auto& a : v1) {
                for (const auto& b : v2) {
                    // order of the tensor of two cyclic-ish summands
                    if (a.kind == Summand::Kind::Cyclic && b.kind == Summand::Kind::Cyclic)
                        out.add(d, Summand::cyclic(std::min(a.exponent, b.exponent)));
                    else if (a.kind == Summand::Kind::Cyclic)
                        out.add(d, a);
                    else if (b.kind == Summand::Kind::Cyclic)
                        out.add(d, b);
                    else if (a.kind == Summand::Kind::Padic || b.kind == Summand::Kind::Padic)
                        out.add(d, Summand::padic());
                    else
                        out.add(d, Summand::free_z());
                }
            }
        }
    }
    return out;
}

bool operator==(const GradedGroup& a, const GradedGroup& b) {
    if (a.prime_ != b.prime_) return false;
    // compare ignoring empty degrees
    auto nonempty = [](const std::map<int, std::vector<Summand>>& m) {
        std::map<int, std::vector<Summand>> out;
        for (const auto& [d, v] : m)
            if (!v.empty()) out[d] = v;
        return out;
    };
    return nonempty(a.entries_) == nonempty(b.entries_);
}

std::string GradedGroup::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, v] : entries_) {
        if (v.empty()) continue;
        if (!first) os << "  ";
        first = false;
        os << d << ": ";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << "+";
            os << v[i].str(prime_);
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string GradedGroup::json() const {
    // list of {"degree": d, "summands": [...]} sorted by degree,
    // summands sorted descending (Z, Zp, then numeric orders)
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [d, v] : entries_) {
        if (v.empty()) continue;
        if (!first) os << ",";
        first = false;
        os << "{\"degree\":" << d << ",\"summands\":[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << "\"" << v[i].str(prime_) << "\"";
        }
        os << "]}";
    }
    os << "]";
    return os.str();
}

void GradedVectorSpace::set_dim(int degree, int dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    if (dim == 0)
        dims_.erase(degree);
    else
        dims_[degree] = dim;
}

void GradedVectorSpace::set_basis(int degree, std::vector<std::string> labels) {
    set_dim(degree, static_cast<int>(labels.size()));
    if (labels.empty())
        basis_.erase(degree);
    else
        basis_[degree] = std::move(labels);
}

int GradedVectorSpace::dim(int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

const std::vector<std::string>* GradedVectorSpace::basis(int degree) const {
    auto it = basis_.find(degree);
    return it == basis_.end() ? nullptr : &it->second;
}

GradedVectorSpace GradedVectorSpace::tensor(const GradedVectorSpace& other, int lo, int hi) const {
    if (prime_ != other.prime_) throw std::invalid_argument("tensor: prime mismatch");
    GradedVectorSpace out(prime_);
    for (const auto& [d1, n1] : dims_)
        for (const auto& [d2, n2] : other.dims_) {
            int d = d1 + d2;
            if (d < lo || d > hi) continue;
            out.set_dim(d, out.dim(d) + n1 * n2);
        }
    return out;
}

GradedVectorSpace GradedVectorSpace::dual() const {
    GradedVectorSpace out(prime_);
    for (const auto& [d, n] : dims_) out.set_dim(-d, n);
    return out;
}

GradedGroup GradedVectorSpace::as_group() const {
    GradedGroup out(prime_);
    for (const auto& [d, n] : dims_) out.add_cyclic(d, 1, n);
    return out;
}

bool operator==(const GradedVectorSpace& a, const GradedVectorSpace& b) {
    return a.prime_ == b.prime_ && a.dims_ == b.dims_;
}

std::string GradedVectorSpace::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, n] : dims_) {
        if (!first) os << " ";
        first = false;
        os << d << ":" << n;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace cacti::graded
