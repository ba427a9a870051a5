#include "orbjac/milnor.hpp"

#include <algorithm>
#include <sstream>

namespace orbjac {

void AlgebraClass::add(const Monomial& m, const CycNum& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c.try_emplace(m, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
    }
}

AlgebraClass& AlgebraClass::operator+=(const AlgebraClass& o) {
    if (!sector) sector = o.sector;
    for (const auto& [m, v] : o.c) add(m, v);
    return *this;
}

AlgebraClass AlgebraClass::operator*(const CycNum& s) const {
    AlgebraClass r{sector, {}};
    if (s.is_zero()) return r;
    for (const auto& [m, v] : c) r.add(m, v * s);
    return r;
}

AlgebraClass AlgebraClass::operator-() const {
    AlgebraClass r{sector, {}};
    for (const auto& [m, v] : c) r.c.emplace(m, -v);
    return r;
}

bool AlgebraClass::operator==(const AlgebraClass& o) const {
    if (c.size() != o.c.size()) return false;
    auto it = o.c.begin();
    for (const auto& [m, v] : c) {
        if (!(m == it->first) || v != it->second) return false;
        ++it;
    }
    return true;
}

Poly AlgebraClass::lift() const {
    if (!sector) throw InternalError("UnboundClass", "class has no sector");
    Poly p = Poly::zero(sector->varset(), sector->field());
    for (const auto& [m, v] : c) p.add_term(m, v);
    return p;
}

std::string AlgebraClass::str() const {
    if (is_zero()) return "0";
    return lift().str();
}

namespace {

// all monomials in the listed variables of exact weighted degree delta
void enumerate_wdeg(const std::vector<int>& vars, const std::vector<long>& w, long delta,
                    size_t pos, Monomial& cur, std::vector<Monomial>& out) {
    if (delta == 0 && pos == vars.size()) {
        out.push_back(cur);
        return;
    }
    if (pos == vars.size()) return;
    int v = vars[pos];
    long maxe = delta / w[v];
    for (long e = 0; e <= maxe; ++e) {
        cur.e[v] = static_cast<int>(e);
        enumerate_wdeg(vars, w, delta - e * w[v], pos + 1, cur, out);
    }
    cur.e[v] = 0;
}

}  // namespace

SectorAlgebra::SectorAlgebra(const Poly& f_full, const std::vector<long>& weights,
                             long degree, uint32_t surviving_mask)
    : vs_(f_full.varset()),
      fld_(f_full.field()),
      weights_(weights),
      degree_(degree),
      mask_(surviving_mask) {
    std::vector<char> kill(vs_.total(), 0);
    for (int v = 0; v < vs_.base; ++v) {
        if (mask_ & (1u << v))
            surviving_.push_back(v);
        else
            kill[v] = 1;
    }
    fg_ = f_full.zero_vars(kill);

    top_ = 0;
    for (int v : surviving_) top_ += degree_ - 2 * weights_[v];
    if (top_ < 0)
        throw InternalError("DegenerateSector", "negative socle degree");

    auto hd = fg_.homogeneous_degree(weights_);
    if (!fg_.is_zero() && (!hd || *hd != degree_))
        throw InternalError("DegenerateSector", "restriction is not weighted homogeneous");

    build_tables();

    // hess(f^g) over the surviving variables
    std::vector<std::vector<Poly>> h(surviving_.size(),
                                     std::vector<Poly>(surviving_.size()));
    for (size_t i = 0; i < surviving_.size(); ++i)
        for (size_t j = 0; j < surviving_.size(); ++j)
            h[i][j] = fg_.partial_derivative(surviving_[i]).partial_derivative(surviving_[j]);
    hess_ = determinant(h, vs_, fld_);
    hess_class_ = reduce(hess_);
    if (hess_class_.is_zero())
        throw InternalError("DegenerateSector", "hessian class vanishes");
}

void SectorAlgebra::build_tables() {
    std::vector<Poly> partials;
    for (int v : surviving_) partials.push_back(fg_.partial_derivative(v));

    long socle_count = 0;
    for (long delta = 0; delta <= top_; ++delta) {
        std::vector<Monomial> monos;
        Monomial cur(vs_.total());
        enumerate_wdeg(surviving_, weights_, delta, 0, cur, monos);
        std::sort(monos.begin(), monos.end(), MonoGreater{});
        if (monos.empty()) continue;

        std::map<Monomial, size_t, MonoGreater> col_of;
        for (size_t i = 0; i < monos.size(); ++i) col_of.emplace(monos[i], i);

        // rows: m * df/dx_i for every multiplier m of matching degree
        std::vector<std::vector<CycNum>> rows;
        for (size_t pi = 0; pi < partials.size(); ++pi) {
            long gdeg = degree_ - weights_[surviving_[pi]];
            if (delta < gdeg) continue;
            std::vector<Monomial> mults;
            Monomial c2(vs_.total());
            enumerate_wdeg(surviving_, weights_, delta - gdeg, 0, c2, mults);
            for (const auto& m : mults) {
                std::vector<CycNum> row(monos.size(), CycNum::zero(fld_));
                for (const auto& [pm, pc] : partials[pi].terms())
                    row[col_of.at(pm * m)] += pc;
                rows.push_back(std::move(row));
            }
        }

        // reduced row echelon form over the field
        size_t nr = rows.size(), nc = monos.size();
        std::vector<long> pivot_col;
        size_t rank = 0;
        for (size_t col = 0; col < nc && rank < nr; ++col) {
            size_t sel = nr;
            for (size_t r = rank; r < nr; ++r)
                if (!rows[r][col].is_zero()) {
                    sel = r;
                    break;
                }
            if (sel == nr) continue;
            std::swap(rows[rank], rows[sel]);
            CycNum inv = rows[rank][col].inverse();
            for (size_t cc = col; cc < nc; ++cc) rows[rank][cc] *= inv;
            for (size_t r = 0; r < nr; ++r) {
                if (r == rank || rows[r][col].is_zero()) continue;
                CycNum f = rows[r][col];
                for (size_t cc = col; cc < nc; ++cc) rows[r][cc] -= f * rows[rank][cc];
            }
            pivot_col.push_back(static_cast<long>(col));
            ++rank;
        }

        std::vector<char> is_pivot(nc, 0);
        for (long pc : pivot_col) is_pivot[pc] = 1;

        for (size_t col = 0; col < nc; ++col) {
            if (!is_pivot[col]) {
                basis_.push_back(monos[col]);
                TermMap self;
                self.emplace(monos[col], CycNum::one(fld_));
                nf_.emplace(monos[col], std::move(self));
                if (delta == top_) {
                    socle_ = monos[col];
                    ++socle_count;
                }
            }
        }
        for (size_t r = 0; r < rank; ++r) {
            size_t pc = static_cast<size_t>(pivot_col[r]);
            TermMap combo;
            for (size_t cc = pc + 1; cc < nc; ++cc)
                if (!is_pivot[cc] && !rows[r][cc].is_zero())
                    combo.emplace(monos[cc], -rows[r][cc]);
            nf_.emplace(monos[pc], std::move(combo));
        }
    }

    mu_ = static_cast<long>(basis_.size());
    if (socle_count != 1)
        throw InternalError("DegenerateSector",
                            "socle dimension " + std::to_string(socle_count) + ", expected 1");

    // independent cross-check: the weighted homogeneous Milnor number
    Rat mu_formula = 1;
    for (int v : surviving_) mu_formula *= Rat(degree_ - weights_[v], weights_[v]);
    if (!is_integer(mu_formula) || mu_formula != mu_)
        throw InternalError("DegenerateSector",
                            "basis count " + std::to_string(mu_) +
                                " disagrees with the weight formula " +
                                rat_to_string(mu_formula));
}

AlgebraClass SectorAlgebra::reduce(const Poly& p) const {
    if (!(p.varset() == vs_))
        throw InternalError("AmbientMismatch", "reducing a polynomial from another ambient");
    AlgebraClass out{this, {}};
    for (const auto& [m, coeff] : p.terms()) {
        bool dead = false;
        for (int v = 0; v < vs_.base; ++v)
            if (!(mask_ & (1u << v)) && m.e[v] != 0) {
                dead = true;
                break;
            }
        for (int v = vs_.base; v < vs_.total(); ++v)
            if (m.e[v] != 0)
                throw InternalError("AmbientMismatch", "monomial uses a non-x alphabet");
        if (dead) continue;
        if (m.weighted_degree(weights_) > top_) continue;
        auto it = nf_.find(m);
        if (it == nf_.end())
            throw InternalError("MissingNormalForm", "no table entry for a monomial");
        for (const auto& [bm, bc] : it->second) out.add(bm, coeff * bc);
    }
    return out;
}

AlgebraClass SectorAlgebra::scalar_class(const CycNum& v) const {
    AlgebraClass r{this, {}};
    r.add(Monomial(vs_.total()), v);
    return r;
}

AlgebraClass SectorAlgebra::multiply(const AlgebraClass& a, const AlgebraClass& b) const {
    return reduce(a.lift() * b.lift());
}

CycNum socle_ratio(const AlgebraClass& a, const AlgebraClass& b) {
    if (b.is_zero()) throw Error("ZeroDenominator", "proportionality against the zero class");
    const auto& [m0, c0] = *b.c.begin();
    CycNum lambda = a.c.count(m0) ? a.c.at(m0) * c0.inverse() : CycNum(Rat(0));
    if (!(a == b * lambda))
        throw Error("NotProportional", "classes are not proportional");
    return lambda;
}

}  // namespace orbjac
