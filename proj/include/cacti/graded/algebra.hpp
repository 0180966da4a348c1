#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cacti/graded/group.hpp"

namespace cacti::graded {

enum class AlgebraKind { Polynomial, Exterior, DividedPower, TruncatedPolynomial };

struct Generator {
    std::string name;
    int degree = 0;
};

struct AlgebraPresentation {
    AlgebraKind kind = AlgebraKind::Polynomial;
    std::vector<Generator> generators;
    int prime = 2;
    int coeff_exponent = 1;   // coefficients Z/p^k; k=1 is F_p
    int truncation_height = 0;  // x^h = 0 for TruncatedPolynomial
};

// Monomial in a presented algebra: exponent (or divided-power index) per generator.
struct Monomial {
    std::vector<int> exps;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Term {
    long long coeff = 0;  // in Z/p^k
    Monomial mon;
};

// Basis and multiplication for one of the four presented algebra kinds,
// materialized on an explicit degree window.
class PresentedAlgebra {
public:
    PresentedAlgebra(AlgebraPresentation pres, int lo, int hi);

    const AlgebraPresentation& presentation() const { return pres_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    long long coeff_modulus() const { return modulus_; }

    int degree_of(const Monomial& m) const;
    std::string label(const Monomial& m) const;

    const std::vector<Monomial>& basis(int degree) const;
    GradedVectorSpace space() const;  // labelled basis per degree (prime p; dims over Z/p^k counted as ranks)

    // product of basis monomials; zero coefficient encodes 0
    Term multiply(const Monomial& a, const Monomial& b) const;

    // all monomials of the window, indexed; degree preserved lookups
    const std::map<int, std::vector<Monomial>>& all() const { return basis_; }

private:
    void enumerate(size_t gen, Monomial& cur, int degree);
    int max_exponent(size_t gen) const;  // -1 = unbounded

    AlgebraPresentation pres_;
    int lo_, hi_;
    long long modulus_;
    std::map<int, std::vector<Monomial>> basis_;
};

// Convenience constructors used all over the calculations.
PresentedAlgebra polynomial_algebra(const std::string& gen, int degree, int p, int lo, int hi);
PresentedAlgebra exterior_algebra(const std::string& gen, int degree, int p, int lo, int hi);
PresentedAlgebra divided_power_algebra(const std::string& gen, int degree, int p, int coeff_exp,
                                       int lo, int hi);

long long binomial_mod(long long n, long long k, long long modulus);

}  // namespace cacti::graded
