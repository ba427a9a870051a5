#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orbjac/poly.hpp"

namespace orbjac {

class SectorAlgebra;

// An element of one sector algebra Jac(f^g), stored as its coordinate
// vector over the sector's monomial basis.
struct AlgebraClass {
    const SectorAlgebra* sector = nullptr;
    TermMap c;

    bool is_zero() const { return c.empty(); }
    void add(const Monomial& m, const CycNum& v);

    AlgebraClass& operator+=(const AlgebraClass& o);
    AlgebraClass operator*(const CycNum& s) const;
    AlgebraClass operator-() const;
    bool operator==(const AlgebraClass& o) const;
    bool operator!=(const AlgebraClass& o) const { return !(*this == o); }

    /// Canonical polynomial representative (the basis monomials verbatim).
    Poly lift() const;

    std::string str() const;
};

// The Jacobian algebra of one restriction f^g, presented by a monomial
// basis with exact per-degree normal-form tables. The grading is the
// weight grading inherited from f; everything above the socle degree
// reduces to zero.
class SectorAlgebra {
public:
    SectorAlgebra(const Poly& f_full, const std::vector<long>& weights, long degree,
                  uint32_t surviving_mask);

    uint32_t surviving_mask() const { return mask_; }
    const std::vector<int>& surviving() const { return surviving_; }
    const Poly& restricted() const { return fg_; }
    long top_degree() const { return top_; }
    long milnor_number() const { return mu_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    const Monomial& socle_monomial() const { return socle_; }

    /// hess(f^g) as a polynomial (exact; 1 for the empty sector).
    const Poly& hessian() const { return hess_; }
    const AlgebraClass& hessian_class() const { return hess_class_; }

    /// Quotient map C[x] -> Jac(f^g): non-surviving variables are set to
    /// zero, then each graded piece is reduced against the normal-form
    /// tables. Exact and linear; multiplicative after lifting.
    AlgebraClass reduce(const Poly& p) const;

    AlgebraClass zero_class() const { return AlgebraClass{this, {}}; }
    AlgebraClass scalar_class(const CycNum& v) const;

    /// Product in the algebra: lift, multiply, reduce.
    AlgebraClass multiply(const AlgebraClass& a, const AlgebraClass& b) const;

    const VarSet& varset() const { return vs_; }
    const FieldPtr& field() const { return fld_; }
    const std::vector<long>& weights() const { return weights_; }

private:
    void build_tables();

    VarSet vs_;
    FieldPtr fld_;
    std::vector<long> weights_;  // full-length weight vector of f
    long degree_;                // d
    uint32_t mask_;
    std::vector<int> surviving_;
    Poly fg_;
    long top_ = 0;
    long mu_ = 0;
    std::vector<Monomial> basis_;
    Monomial socle_;
    Poly hess_;
    AlgebraClass hess_class_;
    std::map<Monomial, TermMap, MonoGreater> nf_;  // monomial -> combo of basis monomials
};

/// The unique lambda with a = lambda * b. Throws ZeroDenominator when b = 0
/// and NotProportional when no such scalar exists.
CycNum socle_ratio(const AlgebraClass& a, const AlgebraClass& b);

}  // namespace orbjac
