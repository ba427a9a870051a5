#pragma once

#include <optional>

#include "orbjac/workspace.hpp"

namespace orbjac {

/// Sign of the permutation merging two disjoint ascending index sequences
/// into one ascending sequence. Throws OverlappingSupports.
int kuenneth_sign(const std::vector<int>& s1, const std::vector<int>& s2);

/// Parity sign of sorting an arbitrary integer sequence (no repeats).
int sort_sign(std::vector<int> seq);

// An element of a twisted algebra: a class per group-element sector. The
// Z/2 parity of a component is the parity of d_g of its sector label.
struct TwistedElement {
    std::map<GroupElement, AlgebraClass> comp;

    void add(const GroupElement& g, const AlgebraClass& cls);
    bool is_zero() const { return comp.empty(); }
    bool operator==(const TwistedElement& o) const;
    bool operator!=(const TwistedElement& o) const { return !(*this == o); }
};

// Structure constants of a G-graded twisted algebra: entry (g,h) is the
// class C in Jac(f^{gh}) with [p] v_g ∘ [q] v_h = [p q C] v_{gh}, or Zero
// (nullopt). Both the orbifold product and the cup product fit this shape.
class ProductTable {
public:
    ProductTable(const Workspace& ws, Group group, std::string side);

    const Workspace& workspace() const { return *ws_; }
    const Group& group() const { return group_; }
    const std::string& side() const { return side_; }

    const std::optional<AlgebraClass>& entry(size_t i, size_t j) const;
    const std::optional<AlgebraClass>& entry(const GroupElement& g,
                                             const GroupElement& h) const;
    void set_entry(size_t i, size_t j, std::optional<AlgebraClass> cls);

    bool entry_is_zero(size_t i, size_t j) const;

    /// [a] v_g ∘ [b] v_h for single components.
    AlgebraClass sector_product(const GroupElement& g, const AlgebraClass& a,
                                const GroupElement& h, const AlgebraClass& b) const;
    /// Bilinear extension to twisted elements.
    TwistedElement product(const TwistedElement& a, const TwistedElement& b) const;

private:
    const Workspace* ws_;
    Group group_;
    std::string side_;
    std::vector<std::vector<std::optional<AlgebraClass>>> entries_;
};

/// Restriction of g to the variables of one atom (identity elsewhere).
GroupElement restrict_to_atom(const GroupElement& g, const Atom& atom);

/// The single-atom structure class: 1 on a unit pair, the signed
/// age/Hessian factor on a mutually inverse pair, Zero otherwise.
/// g and h must be supported on the atom.
std::optional<AlgebraClass> atomic_structure_class(const Workspace& ws, const Atom& atom,
                                                   const GroupElement& g,
                                                   const GroupElement& h);

/// Full structure class of the orbifold product, assembled across atoms
/// with interleaving and Koszul signs.
std::optional<AlgebraClass> orbifold_structure_class(const Workspace& ws,
                                                     const GroupElement& g,
                                                     const GroupElement& h);

ProductTable build_orbifold_table(const Workspace& ws, const Group& group);

/// Eigenvalue exponent of the action of `actor` on the basis vector
/// m * v_sector: <alpha(actor), m> - sum of alpha_i(actor) over I_sector^c,
/// reduced mod 1. The basis vector is invariant iff this is 0.
Rat action_exponent(const GroupElement& actor, const GroupElement& sector, const Monomial& m);

/// The twisted G-action on a single sector component.
AlgebraClass group_action_on_class(const Workspace& ws, const GroupElement& actor,
                                   const GroupElement& sector, const AlgebraClass& cls);

TwistedElement group_action(const Workspace& ws, const GroupElement& actor,
                            const TwistedElement& elt);

// G-invariant subalgebra: the simultaneous eigenvalue-1 basis vectors and
// the closed multiplication table over them.
struct InvariantAlgebra {
    std::vector<std::pair<GroupElement, Monomial>> basis;
    // table[i][j] = expansion of basis_i ∘ basis_j over the invariant basis
    std::vector<std::vector<std::vector<std::pair<size_t, CycNum>>>> table;
};

InvariantAlgebra invariant_subalgebra(const ProductTable& t);

/// dim of the invariant subspace computed as the averaged action trace.
Rat burnside_dimension(const Workspace& ws, const Group& group);

}  // namespace orbjac
