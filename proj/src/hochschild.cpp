#include "orbjac/hochschild.hpp"

#include <bit>

namespace orbjac {

void TwoForm::add(uint32_t left, uint32_t right, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(Key{left, right}, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
    for (const auto& [k, p] : o.terms_) add(k.first, k.second, p);
    return *this;
}

std::pair<int, uint32_t> wedge_words(uint32_t a, uint32_t b) {
    if (a & b) return {0, 0};
    int inv = 0;
    for (int j = 0; j < 31; ++j)
        if (b & (1u << j)) inv += std::popcount(a >> (j + 1));
    return {inv % 2 == 0 ? 1 : -1, a | b};
}

std::pair<int, uint32_t> clifford_contract(uint32_t theta, uint32_t del) {
    if ((theta & del) != theta) return {0, 0};
    int sign = 1;
    // factors of a theta word act right to left, largest index first
    for (int i = 30; i >= 0; --i) {
        if (!(theta & (1u << i))) continue;
        if (std::popcount(del & ((1u << i) - 1)) % 2 != 0) sign = -sign;
        del &= ~(1u << i);
    }
    return {sign, del};
}

std::pair<int, uint32_t> contract_pair(uint32_t p1, uint32_t p2, uint32_t q1, uint32_t q2) {
    int pre = (std::popcount(q1) * std::popcount(p2)) % 2 != 0 ? -1 : 1;
    auto [s1, r1] = clifford_contract(p1, q1);
    if (s1 == 0) return {0, 0};
    auto [s2, r2] = clifford_contract(p2, q2);
    if (s2 == 0) return {0, 0};
    auto [s3, r] = wedge_words(r1, r2);
    if (s3 == 0) return {0, 0};
    return {pre * s1 * s2 * s3, r};
}

namespace {

// embed a single-alphabet polynomial into a wider ambient
Poly embed(const Poly& p, const VarSet& target) {
    std::vector<int> image(p.varset().total());
    for (int v = 0; v < p.varset().total(); ++v) image[v] = v;
    return p.rename_vars(image, target);
}

// substitute y_k -> eig_k * x_k, collapsing to one alphabet
Poly collapse_y_scaled(const Poly& p, const std::vector<CycNum>& eig, const VarSet& out_vs) {
    int n = p.varset().base;
    Poly out = Poly::zero(out_vs, p.field());
    for (const auto& [m, c] : p.terms()) {
        Monomial t(out_vs.total());
        CycNum s = c;
        for (int k = 0; k < n; ++k) {
            int ex = m.e[k], ey = m.e[n + k];
            t.e[k] = ex + ey;
            if (ey != 0) s *= eig[k].pow(ey);
        }
        out.add_term(t, s);
    }
    return out;
}

// substitute y_k -> x_k on the fixed locus and y_k -> 0 off it
Poly collapse_y_fixpoint(const Poly& p, const GroupElement& g, const VarSet& out_vs) {
    int n = p.varset().base;
    Poly out = Poly::zero(out_vs, p.field());
    for (const auto& [m, c] : p.terms()) {
        Monomial t(out_vs.total());
        bool dead = false;
        for (int k = 0; k < n && !dead; ++k) {
            int ex = m.e[k], ey = m.e[n + k];
            if (ey != 0 && g.alpha(k) != 0) dead = true;
            t.e[k] = ex + ey;
        }
        if (!dead) out.add_term(t, c);
    }
    return out;
}

}  // namespace

TwoForm three_point_form(const Workspace& ws) {
    int n = ws.n();
    VarSet vs3{n, 3};
    Poly f3 = embed(ws.f(), vs3);
    TwoForm form(vs3, ws.field());
    for (int i = 0; i < n; ++i) {
        Poly inner = difference_derivative(f3, i, Alphabet::X, Alphabet::Y);
        for (int j = 0; j <= i; ++j) {
            Poly outer = difference_derivative(inner, j, Alphabet::Y, Alphabet::Z);
            form.add(1u << i, 1u << j, outer);
        }
    }
    return form;
}

TwoForm restrict_three_point(const Workspace& ws, const TwoForm& form,
                             const GroupElement& g) {
    int n = ws.n();
    VarSet vs1{n, 1};
    std::vector<CycNum> eig = ws.eigenvalues(g);
    TwoForm out(vs1, ws.field());
    for (const auto& [key, poly] : form.terms()) {
        Poly r = Poly::zero(vs1, ws.field());
        for (const auto& [m, c] : poly.terms()) {
            Monomial t(n);
            CycNum s = c;
            for (int k = 0; k < n; ++k) {
                int ex = m.e[k], ey = m.e[n + k], ez = m.e[2 * n + k];
                t.e[k] = ex + ey + ez;
                if (ey != 0) s *= eig[k].pow(ey);
            }
            r.add_term(t, s);
        }
        out.add(key.first, key.second, r);
    }
    return out;
}

std::vector<std::pair<uint32_t, Poly>> boundary_form(const Workspace& ws,
                                                     const GroupElement& g) {
    int n = ws.n();
    VarSet vs1{n, 1}, vs2{n, 2};
    Poly f2 = embed(ws.f(), vs2);
    std::vector<CycNum> eig = ws.eigenvalues(g);
    CycNum one = CycNum::one(ws.field());

    std::vector<std::pair<uint32_t, Poly>> out;
    for (int i : g.moved()) {
        Poly first = collapse_y_scaled(difference_derivative(f2, i, Alphabet::X, Alphabet::Y),
                                       eig, vs1);
        Poly first2 = embed(first, vs2);
        for (int j : g.moved()) {
            if (j >= i) continue;
            Poly second = collapse_y_fixpoint(
                difference_derivative(first2, j, Alphabet::X, Alphabet::Y), g, vs1);
            if (second.is_zero()) continue;
            CycNum pref = (one - eig[j]).inverse();
            out.emplace_back((1u << j) | (1u << i), second * pref);
        }
    }
    return out;
}

namespace {

// cup-side computation with the g-independent pieces precomputed
struct CupContext {
    const Workspace& ws;
    TwoForm form3;

    explicit CupContext(const Workspace& w) : ws(w), form3(three_point_form(w)) {}

    std::optional<AlgebraClass> structure_class(const GroupElement& g, const GroupElement& h);
};

TwoForm mul_reduced(const TwoForm& A, const TwoForm& B, const SectorAlgebra& sec) {
    TwoForm out(A.varset(), A.field());
    for (const auto& [ka, pa] : A.terms()) {
        for (const auto& [kb, pb] : B.terms()) {
            int koszul = (std::popcount(ka.second) * std::popcount(kb.first)) % 2 != 0 ? -1 : 1;
            auto [sl, left] = wedge_words(ka.first, kb.first);
            if (sl == 0) continue;
            auto [sr, right] = wedge_words(ka.second, kb.second);
            if (sr == 0) continue;
            Poly prod = sec.reduce(pa * pb).lift();
            int sign = koszul * sl * sr;
            out.add(left, right, sign < 0 ? -prod : prod);
        }
    }
    return out;
}

std::optional<AlgebraClass> CupContext::structure_class(const GroupElement& g,
                                                        const GroupElement& h) {
    GroupElement gh = g * h;
    long defect2 = g.codim() + h.codim() - gh.codim();
    if (defect2 < 0 || defect2 % 2 != 0) return std::nullopt;
    long defect = defect2 / 2;

    const SectorAlgebra& sec = ws.sector(gh);
    VarSet vs1{ws.n(), 1};

    TwoForm s(vs1, ws.field());
    for (const auto& [key, poly] : restrict_three_point(ws, form3, g).terms())
        s.add(key.first, key.second, sec.reduce(poly).lift());
    for (const auto& [word, poly] : boundary_form(ws, g))
        s.add(word, 0, sec.reduce(poly).lift());
    std::vector<CycNum> eig = ws.eigenvalues(g);
    for (const auto& [word, poly] : boundary_form(ws, h))
        s.add(0, word, sec.reduce(poly.scale_vars(eig)).lift());

    TwoForm power(vs1, ws.field());
    power.add(0, 0, sec.reduce(Poly::constant(vs1, ws.field(), CycNum::one(ws.field()))).lift());
    for (long k = 0; k < defect; ++k) power = mul_reduced(power, s, sec);

    uint32_t target = gh.moved_mask();
    AlgebraClass out = sec.zero_class();
    for (const auto& [key, poly] : power.terms()) {
        auto [sign, word] = contract_pair(key.first, key.second, g.moved_mask(), h.moved_mask());
        if (sign == 0 || word != target) continue;
        AlgebraClass c = sec.reduce(poly);
        out += (sign < 0 ? -c : c);
    }

    Rat factorial = 1;
    for (long k = 2; k <= defect; ++k) factorial *= k;
    return out * CycNum(1 / factorial);
}

}  // namespace

std::optional<AlgebraClass> cup_structure_class(const Workspace& ws, const GroupElement& g,
                                                const GroupElement& h) {
    CupContext ctx(ws);
    return ctx.structure_class(g, h);
}

ProductTable build_hochschild_table(const Workspace& ws, const Group& group) {
    CupContext ctx(ws);
    ProductTable t(ws, group, "hochschild");
    for (size_t i = 0; i < group.order(); ++i)
        for (size_t j = 0; j < group.order(); ++j)
            t.set_entry(i, j, ctx.structure_class(group[i], group[j]));
    return t;
}

AlgebraClass closed_form_structure_class(const Workspace& ws, const Atom& atom,
                                         const GroupElement& g) {
    if (g.is_identity())
        throw InputError("DomainError", "closed form needs a non-identity symmetry");
    for (int v : g.moved()) {
        bool inside = false;
        for (int w : atom.vars) inside |= (v == w);
        if (!inside)
            throw InputError("DomainError", "symmetry not supported on the atom");
    }

    int m = atom.size();
    const FieldPtr& fld = ws.field();
    const VarSet& vs = ws.vs();
    CycNum one = CycNum::one(fld);

    std::vector<CycNum> gv;
    for (int li = 0; li < m; ++li) gv.push_back(ws.root(g.alpha(atom.vars[li])));

    // number of moved variables inside the atom; a prefix for chains
    int k = 0;
    for (int li = 0; li < m; ++li)
        if (g.alpha(atom.vars[li]) != 0) ++k;
    int size = atom.kind == Atom::Kind::Chain ? k : m;

    auto xvar = [&](int li) { return Poly::variable(vs, fld, atom.vars[li]); };
    auto xpow = [&](int li, int e) {
        if (e < 0)
            throw InputError("UnsupportedOracle",
                             "closed form needs every exponent of the moved prefix >= 2");
        Monomial mm(vs.total());
        mm.e[atom.vars[li]] = e;
        return Poly::monomial(vs, fld, mm, one);
    };

    std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size, Poly::zero(vs, fld)));
    for (int li = 0; li < size; ++li) {
        long a = atom.exps[li];
        // diagonal: -(x_i^{a-2} x_{i+1} / (g_i - 1)) ((1 - g_i^a)/(1 - g_i) - a)
        CycNum c = (one - gv[li].pow(a)) * (one - gv[li]).inverse() - CycNum(Rat(a));
        c *= (gv[li] - one).inverse();
        Poly nextvar = Poly::constant(vs, fld, one);
        if (atom.kind == Atom::Kind::Loop)
            nextvar = xvar((li + 1) % m);
        else if (li + 1 < m)
            nextvar = xvar(li + 1);
        mat[li][li] = xpow(li, static_cast<int>(a) - 2) * nextvar * (-c);
        // superdiagonal: x_i^{a-1} g_i^a / (1 - g_i)
        if (li + 1 < size)
            mat[li][li + 1] =
                xpow(li, static_cast<int>(a) - 1) * (gv[li].pow(a) * (one - gv[li]).inverse());
        // subdiagonal: x_{i-1}^{a_{i-1}-1} / (g_{i-1} - 1)
        if (li >= 1)
            mat[li][li - 1] = xpow(li - 1, static_cast<int>(atom.exps[li - 1]) - 1) *
                              (gv[li - 1] - one).inverse();
    }
    if (atom.kind == Atom::Kind::Loop && size >= 2) {
        long a = atom.exps[m - 1];
        Poly corner = xpow(m - 1, static_cast<int>(a) - 1);
        mat[m - 1][0] += corner * (gv[m - 1].pow(a) * (one - gv[m - 1]).inverse());
        mat[0][m - 1] += corner * (gv[m - 1] - one).inverse();
    }

    Poly det = determinant(mat, vs, fld);
    AlgebraClass cls = ws.identity_sector().reduce(det);
    if ((size * (size - 1) / 2) % 2 != 0) cls = -cls;
    return cls;
}

}  // namespace orbjac
