#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cacti::graded {

// Thrown when a computation would need data outside the requested window.
// Truncation is explicit everywhere; we never silently clip.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// One cyclic summand: Z, the p-adic integers (symbolic), or Z/p^k.
struct Summand {
    enum class Kind { Free, Padic, Cyclic };
    Kind kind = Kind::Cyclic;
    int exponent = 1;  // k in Z/p^k; ignored for Free/Padic

    static Summand free_z() { return {Kind::Free, 0}; }
    static Summand padic() { return {Kind::Padic, 0}; }
    static Summand cyclic(int k) {
        if (k < 1) throw std::invalid_argument("cyclic summand needs exponent >= 1");
        return {Kind::Cyclic, k};
    }

    // sort key: Z first, then Zp, then cyclic by descending order
    friend bool operator<(const Summand& a, const Summand& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.exponent > b.exponent;
    }
    friend bool operator==(const Summand& a, const Summand& b) = default;

    std::string str(int prime) const;
};

// Degreewise finite direct sum of cyclic groups, Z's and Z_p's.
// Summand lists are kept sorted; equality is degreewise multiset equality.
class GradedGroup {
public:
    explicit GradedGroup(int prime) : prime_(prime) {}

    int prime() const { return prime_; }

    void add(int degree, Summand s);
    void add_cyclic(int degree, int exponent, int copies = 1);

    const std::vector<Summand>& at(int degree) const;
    bool zero_at(int degree) const { return at(degree).empty(); }
    const std::map<int, std::vector<Summand>>& entries() const { return entries_; }

    GradedGroup shifted(int amount) const;         // degree += amount
    GradedGroup direct_sum(const GradedGroup& other) const;

    // degreewise convolution; Z/p^a (x) Z/p^b contributes Z/p^min(a,b),
    // Z and Zp act as units on the order. Window [lo,hi] inclusive.
    GradedGroup tensor(const GradedGroup& other, int lo, int hi) const;

    friend bool operator==(const GradedGroup& a, const GradedGroup& b);

    std::string str() const;
    std::string json() const;  // the serialization contract used by the CLI

private:
    int prime_;
    std::map<int, std::vector<Summand>> entries_;
};

// Graded F_p vector space: dims per degree, optional labelled basis.
class GradedVectorSpace {
public:
    explicit GradedVectorSpace(int prime) : prime_(prime) {}

    int prime() const { return prime_; }
    void set_dim(int degree, int dim);
    void set_basis(int degree, std::vector<std::string> labels);
    int dim(int degree) const;
    const std::vector<std::string>* basis(int degree) const;
    const std::map<int, int>& dims() const { return dims_; }

    GradedVectorSpace tensor(const GradedVectorSpace& other, int lo, int hi) const;
    GradedVectorSpace dual() const;  // degree -> -degree

    // view as a graded group (each dimension becomes a Z/p summand)
    GradedGroup as_group() const;

    friend bool operator==(const GradedVectorSpace& a, const GradedVectorSpace& b);
    std::string str() const;

private:
    int prime_;
    std::map<int, int> dims_;
    std::map<int, std::vector<std::string>> basis_;
};

}  // namespace cacti::graded
