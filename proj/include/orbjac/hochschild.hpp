#pragma once

#include <cstdint>
#include <optional>

#include "orbjac/orbifold.hpp"

namespace orbjac {

// Element of R ⊗ C[theta] ⊗ C[theta]: coefficient polynomials indexed by a
// pair of strictly-increasing theta words, stored as bitmasks with all
// reordering signs absorbed into the coefficients.
class TwoForm {
public:
    using Key = std::pair<uint32_t, uint32_t>;

    TwoForm(VarSet vs, FieldPtr fld) : vs_(vs), fld_(std::move(fld)) {}

    const VarSet& varset() const { return vs_; }
    const FieldPtr& field() const { return fld_; }
    const std::map<Key, Poly>& terms() const { return terms_; }

    void add(uint32_t left, uint32_t right, const Poly& coeff);
    bool is_zero() const { return terms_.empty(); }

    TwoForm& operator+=(const TwoForm& o);

private:
    VarSet vs_;
    FieldPtr fld_;
    std::map<Key, Poly> terms_;
};

/// Product of theta words in the exterior algebra: (sign, union mask),
/// sign 0 when the words overlap.
std::pair<int, uint32_t> wedge_words(uint32_t a, uint32_t b);

/// theta_I acting on del_J through the Clifford module structure on
/// C[del_theta]: (sign, J \ I), sign 0 unless I is contained in J.
std::pair<int, uint32_t> clifford_contract(uint32_t theta, uint32_t del);

/// The four-slot pairing: contract p1 into q1 and p2 into q2, multiply the
/// leftovers, with the global prefactor (-1)^{|q1||p2|}. Returns sign 0
/// when anything annihilates.
std::pair<int, uint32_t> contract_pair(uint32_t p1, uint32_t p2, uint32_t q1, uint32_t q2);

/// The double difference-derivative form of f over C[x,y,z]: coefficient
/// of theta_i (x) theta_j for every pair j <= i.
TwoForm three_point_form(const Workspace& ws);

/// Restriction of the three-point form to { y = g(x), z = x }, landing in
/// single-alphabet coefficients.
TwoForm restrict_three_point(const Workspace& ws, const TwoForm& form, const GroupElement& g);

/// The one-sided boundary form of (f, g): for each pair j < i of moved
/// indices, the coefficient of theta_j theta_i (one word, stored sorted).
std::vector<std::pair<uint32_t, Poly>> boundary_form(const Workspace& ws,
                                                     const GroupElement& g);

/// Structure class of the cup product: Zero (nullopt) when the codimension
/// defect is not a non-negative integer, otherwise the contraction
/// coefficient reduced in Jac(f^{gh}).
std::optional<AlgebraClass> cup_structure_class(const Workspace& ws, const GroupElement& g,
                                                const GroupElement& h);

ProductTable build_hochschild_table(const Workspace& ws, const Group& group);

/// Verification oracle: the signed determinant of the banded matrix
/// attached to a non-identity symmetry supported on one chain or loop
/// atom. Equals the structure class of (g, g^{-1}) on the cup side.
AlgebraClass closed_form_structure_class(const Workspace& ws, const Atom& atom,
                                         const GroupElement& g);

}  // namespace orbjac
