#include "orbjac/workspace.hpp"

namespace orbjac {

Workspace::Workspace(InvertiblePolynomial ip, std::optional<int> conductor_override)
    : ip_(std::move(ip)) {
    gf_ = maximal_group(ip_);
    minimal_conductor_ = 4 * static_cast<int>(gf_.exponent());
    int m = conductor_override.value_or(minimal_conductor_);
    if (m < minimal_conductor_ || m % minimal_conductor_ != 0)
        throw InputError("ConductorMismatch",
                         "conductor " + std::to_string(m) + " is not a multiple of the minimal " +
                             std::to_string(minimal_conductor_));
    fld_ = std::make_shared<CycField>(m);
    f_ = ip_.realize(fld_);
    weights_ = ip_.weights;
}

std::vector<CycNum> Workspace::eigenvalues(const GroupElement& g) const {
    std::vector<CycNum> v;
    for (int i = 0; i < n(); ++i) v.push_back(root(g.alpha(i)));
    return v;
}

const SectorAlgebra& Workspace::sector(const GroupElement& g) const {
    uint32_t mask = 0;
    for (int v : g.fixed()) mask |= 1u << v;
    return sector_by_mask(mask);
}

const SectorAlgebra& Workspace::sector_by_mask(uint32_t mask) const {
    auto it = sectors_.find(mask);
    if (it == sectors_.end())
        it = sectors_
                 .emplace(mask, std::make_unique<SectorAlgebra>(f_, weights_, ip_.degree, mask))
                 .first;
    return *it->second;
}

const SectorAlgebra& Workspace::identity_sector() const {
    return sector_by_mask((1u << n()) - 1);
}

Poly Workspace::restrict(const GroupElement& g) const {
    std::vector<char> kill(vs().total(), 0);
    for (int v : g.moved()) kill[v] = 1;
    return f_.zero_vars(kill);
}

const Workspace::HessianFactor& Workspace::hessian_factor(const GroupElement& g) const {
    uint32_t key = g.moved_mask();
    auto it = hessians_.find(key);
    if (it != hessians_.end()) return it->second;

    const SectorAlgebra& id = identity_sector();
    HessianFactor hf;
    if (g.is_identity()) {
        hf.cls = id.scalar_class(CycNum::one(fld_));
        hf.scale = CycNum::one(fld_);
        return hessians_.emplace(key, std::move(hf)).first->second;
    }

    const auto& moved = g.moved();
    std::vector<std::vector<Poly>> snd(moved.size(), std::vector<Poly>(moved.size()));
    for (size_t i = 0; i < moved.size(); ++i)
        for (size_t j = 0; j < moved.size(); ++j)
            snd[i][j] = f_.partial_derivative(moved[i]).partial_derivative(moved[j]);
    Poly partial_hess = determinant(snd, vs(), fld_);

    const SectorAlgebra& gs = sector(g);
    AlgebraClass lhs = id.reduce(gs.hessian() * partial_hess);
    const AlgebraClass& rhs = id.hessian_class();
    CycNum lambda;
    try {
        lambda = socle_ratio(rhs, lhs);
    } catch (const Error& e) {
        throw InternalError("SocleMismatch",
                            std::string("hessian comparison failed for g = ") + g.str() + ": " +
                                e.what());
    }
    if (lambda.is_zero())
        throw InternalError("SocleMismatch", "hessian class ratio vanished for g = " + g.str());

    hf.scale = lambda * CycNum(Rat(gs.milnor_number(), id.milnor_number()));
    hf.cls = id.reduce(partial_hess) * hf.scale;
    return hessians_.emplace(key, std::move(hf)).first->second;
}

}  // namespace orbjac
