#pragma once

#include <map>
#include <memory>
#include <optional>

#include "orbjac/invpoly.hpp"
#include "orbjac/milnor.hpp"
#include "orbjac/symmetry.hpp"

namespace orbjac {

// Everything one (f, conductor) run shares: the classified polynomial, its
// maximal symmetry group, the cyclotomic field housing every scalar, and
// the lazily built sector algebras. Sectors and paired-Hessian data depend
// only on the fixed locus, so they are cached by variable mask.
class Workspace {
public:
    explicit Workspace(InvertiblePolynomial ip, std::optional<int> conductor_override = {});

    const InvertiblePolynomial& ip() const { return ip_; }
    const Group& maximal() const { return gf_; }
    const FieldPtr& field() const { return fld_; }
    const Poly& f() const { return f_; }
    const VarSet& vs() const { return f_.varset(); }
    int n() const { return ip_.n; }

    /// 4 * exponent(G_f): the smallest conductor housing the group
    /// eigenvalues, their half angles and e[1/4].
    int minimal_conductor() const { return minimal_conductor_; }

    CycNum root(const Rat& alpha) const { return root_of_unity(fld_, alpha); }
    /// e[alpha_i(g)] for every variable.
    std::vector<CycNum> eigenvalues(const GroupElement& g) const;

    const SectorAlgebra& sector(const GroupElement& g) const;
    const SectorAlgebra& sector_by_mask(uint32_t surviving_mask) const;
    const SectorAlgebra& identity_sector() const;

    /// f restricted to Fix(g).
    Poly restrict(const GroupElement& g) const;

    // The class H = [m * det(d2f)_{I_g^c}] in Jac(f) together with the
    // normalizing constant m, fixed by the requirement that
    // hess(f^g) * H / mu_{f^g} and hess(f) / mu_f agree in Jac(f).
    struct HessianFactor {
        AlgebraClass cls;
        CycNum scale;
    };
    const HessianFactor& hessian_factor(const GroupElement& g) const;

private:
    InvertiblePolynomial ip_;
    Group gf_;
    int minimal_conductor_;
    FieldPtr fld_;
    Poly f_;
    std::vector<long> weights_;
    mutable std::map<uint32_t, std::unique_ptr<SectorAlgebra>> sectors_;
    mutable std::map<uint32_t, HessianFactor> hessians_;
};

}  // namespace orbjac
