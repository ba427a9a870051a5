#include "orbjac/orbifold.hpp"

#include <algorithm>

namespace orbjac {

int kuenneth_sign(const std::vector<int>& s1, const std::vector<int>& s2) {
    for (int a : s1)
        for (int b : s2)
            if (a == b)
                throw InputError("OverlappingSupports",
                                 "index " + std::to_string(a) + " lies in both supports");
    long inv = 0;
    for (int a : s1)
        for (int b : s2)
            if (a > b) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

int sort_sign(std::vector<int> seq) {
    long inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

void TwistedElement::add(const GroupElement& g, const AlgebraClass& cls) {
    if (cls.is_zero()) return;
    auto it = comp.find(g);
    if (it == comp.end()) {
        comp.emplace(g, cls);
    } else {
        it->second += cls;
        if (it->second.is_zero()) comp.erase(it);
    }
}

bool TwistedElement::operator==(const TwistedElement& o) const {
    return comp == o.comp;
}

ProductTable::ProductTable(const Workspace& ws, Group group, std::string side)
    : ws_(&ws), group_(std::move(group)), side_(std::move(side)) {
    entries_.assign(group_.order(),
                    std::vector<std::optional<AlgebraClass>>(group_.order()));
}

const std::optional<AlgebraClass>& ProductTable::entry(size_t i, size_t j) const {
    return entries_[i][j];
}

const std::optional<AlgebraClass>& ProductTable::entry(const GroupElement& g,
                                                       const GroupElement& h) const {
    return entries_[group_.index_of(g)][group_.index_of(h)];
}

void ProductTable::set_entry(size_t i, size_t j, std::optional<AlgebraClass> cls) {
    entries_[i][j] = std::move(cls);
}

bool ProductTable::entry_is_zero(size_t i, size_t j) const {
    return !entries_[i][j] || entries_[i][j]->is_zero();
}

AlgebraClass ProductTable::sector_product(const GroupElement& g, const AlgebraClass& a,
                                          const GroupElement& h,
                                          const AlgebraClass& b) const {
    GroupElement gh = g * h;
    const SectorAlgebra& target = ws_->sector(gh);
    const auto& c = entry(g, h);
    if (!c || a.is_zero() || b.is_zero()) return target.zero_class();
    return target.reduce(a.lift() * b.lift() * c->lift());
}

TwistedElement ProductTable::product(const TwistedElement& a, const TwistedElement& b) const {
    TwistedElement out;
    for (const auto& [g, ca] : a.comp)
        for (const auto& [h, cb] : b.comp)
            out.add(g * h, sector_product(g, ca, h, cb));
    return out;
}

GroupElement restrict_to_atom(const GroupElement& g, const Atom& atom) {
    std::vector<Rat> a(g.n(), Rat(0));
    for (int v : atom.vars) a[v] = g.alpha(v);
    return GroupElement(std::move(a));
}

namespace {

// moved indices of g lying inside the atom, ascending
std::vector<int> support_in_atom(const GroupElement& g, const Atom& atom) {
    std::vector<int> s;
    for (int v : g.moved())
        for (int w : atom.vars)
            if (v == w) s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
}

// sign identifying v_g with the ordered product of its atomic generators:
// parity of sorting the concatenation of the per-atom supports
int atom_order_sign(const Workspace& ws, const GroupElement& g) {
    std::vector<int> concat;
    for (const auto& atom : ws.ip().atoms) {
        auto s = support_in_atom(g, atom);
        concat.insert(concat.end(), s.begin(), s.end());
    }
    return sort_sign(std::move(concat));
}

CycNum pair_scalar(const Workspace& ws, const GroupElement& g) {
    // (-1)^{d(d-1)/2} e[-age(g)/2]
    int d = g.codim();
    CycNum s = ws.root(mod1(-g.age() / 2));
    if ((d * (d - 1) / 2) % 2 != 0) s = -s;
    return s;
}

}  // namespace

std::optional<AlgebraClass> atomic_structure_class(const Workspace& ws, const Atom& atom,
                                                   const GroupElement& g,
                                                   const GroupElement& h) {
    GroupElement gh = g * h;
    const SectorAlgebra& target = ws.sector(gh);
    if (g.is_identity() || h.is_identity())
        return target.scalar_class(CycNum::one(ws.field()));
    if (gh.is_identity()) {
        const auto& hf = ws.hessian_factor(g);
        return hf.cls * pair_scalar(ws, g);
    }
    return std::nullopt;
}

std::optional<AlgebraClass> orbifold_structure_class(const Workspace& ws,
                                                     const GroupElement& g,
                                                     const GroupElement& h) {
    const auto& atoms = ws.ip().atoms;
    CycNum scalar = CycNum::one(ws.field());
    Poly acc = Poly::constant(ws.vs(), ws.field(), CycNum::one(ws.field()));
    long koszul = 0;  // sum over atom pairs mu < nu of d_{h_mu} d_{g_nu}

    std::vector<int> dg, dh;
    for (const auto& atom : atoms) {
        dg.push_back(static_cast<int>(support_in_atom(g, atom).size()));
        dh.push_back(static_cast<int>(support_in_atom(h, atom).size()));
    }
    for (size_t mu = 0; mu < atoms.size(); ++mu)
        for (size_t nu = mu + 1; nu < atoms.size(); ++nu) koszul += dh[mu] * dg[nu];

    for (const auto& atom : atoms) {
        GroupElement ga = restrict_to_atom(g, atom);
        GroupElement ha = restrict_to_atom(h, atom);
        if (ga.is_identity() || ha.is_identity()) continue;
        if ((ga * ha).is_identity()) {
            scalar *= pair_scalar(ws, ga);
            acc = acc * ws.hessian_factor(ga).cls.lift();
        } else {
            return std::nullopt;
        }
    }

    int sign = atom_order_sign(ws, g) * atom_order_sign(ws, h) * atom_order_sign(ws, g * h);
    if (koszul % 2 != 0) sign = -sign;
    if (sign < 0) scalar = -scalar;

    return ws.sector(g * h).reduce(acc) * scalar;
}

ProductTable build_orbifold_table(const Workspace& ws, const Group& group) {
    ProductTable t(ws, group, "orbifold");
    for (size_t i = 0; i < group.order(); ++i)
        for (size_t j = 0; j < group.order(); ++j)
            t.set_entry(i, j, orbifold_structure_class(ws, group[i], group[j]));
    return t;
}

Rat action_exponent(const GroupElement& actor, const GroupElement& sector,
                    const Monomial& m) {
    Rat e = 0;
    for (int i = 0; i < actor.n(); ++i) e += actor.alpha(i) * m.e[i];
    for (int i : sector.moved()) e -= actor.alpha(i);
    return mod1(e);
}

AlgebraClass group_action_on_class(const Workspace& ws, const GroupElement& actor,
                                   const GroupElement& sector, const AlgebraClass& cls) {
    // the basis monomials are joint eigenvectors, no reduction needed
    AlgebraClass out{cls.sector, {}};
    for (const auto& [m, c] : cls.c)
        out.add(m, c * ws.root(action_exponent(actor, sector, m)));
    return out;
}

TwistedElement group_action(const Workspace& ws, const GroupElement& actor,
                            const TwistedElement& elt) {
    TwistedElement out;
    for (const auto& [g, cls] : elt.comp)
        out.add(g, group_action_on_class(ws, actor, g, cls));
    return out;
}

InvariantAlgebra invariant_subalgebra(const ProductTable& t) {
    const Workspace& ws = t.workspace();
    const Group& group = t.group();
    InvariantAlgebra inv;

    std::map<std::pair<size_t, Monomial>, size_t,
             decltype([](const auto& a, const auto& b) {
                 if (a.first != b.first) return a.first < b.first;
                 return MonoGreater{}(a.second, b.second);
             })>
        index;

    for (size_t gi = 0; gi < group.order(); ++gi) {
        const GroupElement& g = group[gi];
        for (const auto& m : ws.sector(g).basis()) {
            bool keep = true;
            for (const auto& h : group)
                if (action_exponent(h, g, m) != 0) {
                    keep = false;
                    break;
                }
            if (keep) {
                index.emplace(std::make_pair(gi, m), inv.basis.size());
                inv.basis.emplace_back(g, m);
            }
        }
    }

    inv.table.assign(inv.basis.size(), {});
    for (size_t i = 0; i < inv.basis.size(); ++i) {
        inv.table[i].assign(inv.basis.size(), {});
        for (size_t j = 0; j < inv.basis.size(); ++j) {
            const auto& [g, mg] = inv.basis[i];
            const auto& [h, mh] = inv.basis[j];
            const SectorAlgebra& sec = ws.sector(g);
            const SectorAlgebra& sech = ws.sector(h);
            AlgebraClass a = sec.reduce(Poly::monomial(ws.vs(), ws.field(), mg,
                                                       CycNum::one(ws.field())));
            AlgebraClass b = sech.reduce(Poly::monomial(ws.vs(), ws.field(), mh,
                                                        CycNum::one(ws.field())));
            AlgebraClass prod = t.sector_product(g, a, h, b);
            size_t ghi = group.index_of(g * h);
            for (const auto& [m, c] : prod.c) {
                auto it = index.find(std::make_pair(ghi, m));
                if (it == index.end())
                    throw InternalError("InvariantLeak",
                                        "product of invariants has a non-invariant component");
                inv.table[i][j].emplace_back(it->second, c);
            }
        }
    }
    return inv;
}

Rat burnside_dimension(const Workspace& ws, const Group& group) {
    CycNum total;
    for (const auto& h : group) {
        for (const auto& g : group) {
            for (const auto& m : ws.sector(g).basis())
                total += ws.root(action_exponent(h, g, m));
        }
    }
    if (!total.is_rational())
        throw InternalError("BurnsideNotRational", "trace average is not rational");
    Rat avg = total.rational_part() / Rat(static_cast<long>(group.order()));
    return avg;
}

}  // namespace orbjac
