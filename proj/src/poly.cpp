#include "orbjac/poly.hpp"

#include <algorithm>
#include <sstream>

namespace orbjac {

std::string VarSet::name(int v) const {
    static const char* letters[] = {"x", "y", "z"};
    return std::string(letters[static_cast<int>(alphabet_of(v))]) +
           std::to_string(base_index(v) + 1);
}

long Monomial::degree() const {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

long Monomial::weighted_degree(const std::vector<long>& w) const {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

bool MonoGreater::operator()(const Monomial& a, const Monomial& b) const {
    long da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

Poly Poly::zero(const VarSet& vs, const FieldPtr& fld) {
    Poly p;
    p.vs_ = vs;
    p.fld_ = fld;
    return p;
}

Poly Poly::constant(const VarSet& vs, const FieldPtr& fld, const CycNum& c) {
    Poly p = zero(vs, fld);
    p.add_term(Monomial(vs.total()), c);
    return p;
}

Poly Poly::variable(const VarSet& vs, const FieldPtr& fld, int v) {
    Poly p = zero(vs, fld);
    Monomial m(vs.total());
    m.e[v] = 1;
    p.add_term(m, CycNum::one(fld));
    return p;
}

Poly Poly::monomial(const VarSet& vs, const FieldPtr& fld, Monomial m, const CycNum& c) {
    Poly p = zero(vs, fld);
    p.add_term(std::move(m), c);
    return p;
}

void Poly::add_term(const Monomial& m, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (!(vs_ == o.vs_))
        throw InternalError("AmbientMismatch", "polynomials live in different variable sets");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r = Poly::zero(a.vs_, a.fld_ ? a.fld_ : b.fld_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly operator*(const Poly& a, const CycNum& c) {
    Poly r = Poly::zero(a.vs_, a.fld_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : a.terms_) r.add_term(m, x * c);
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (!(a.vs_ == b.vs_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
        if (!(m == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

Poly Poly::partial_derivative(int v) const {
    if (v < 0 || v >= vs_.total())
        throw InputError("UnknownVariable", "no variable with index " + std::to_string(v));
    Poly r = zero(vs_, fld_);
    for (const auto& [m, c] : terms_) {
        if (m.e[v] == 0) continue;
        Monomial d = m;
        long k = d.e[v]--;
        r.add_term(d, c * CycNum(Rat(k)));
    }
    return r;
}

Poly Poly::substitute(const std::map<int, Poly>& images, const VarSet& target) const {
    for (const auto& [v, img] : images) {
        if (v < 0 || v >= vs_.total())
            throw InputError("UnknownVariable", "assignment names variable index " + std::to_string(v));
        if (!(img.varset() == target))
            throw InputError("AmbientMismatch", "substitution image outside the target variable set");
    }
    Poly r = zero(target, fld_);
    for (const auto& [m, c] : terms_) {
        Poly t = constant(target, fld_, c);
        for (int v = 0; v < vs_.total(); ++v) {
            if (m.e[v] == 0) continue;
            auto it = images.find(v);
            if (it == images.end())
                throw InputError("UnknownVariable",
                                 "assignment does not cover " + vs_.name(v));
            Poly pw = it->second;
            for (int k = 1; k < m.e[v]; ++k) pw = pw * it->second;
            t = t * pw;
        }
        r += t;
    }
    return r;
}

Poly Poly::scale_vars(const std::vector<CycNum>& mult) const {
    Poly r = zero(vs_, fld_);
    for (const auto& [m, c] : terms_) {
        CycNum s = c;
        for (int v = 0; v < vs_.total(); ++v)
            if (m.e[v] != 0) s *= mult[v].pow(m.e[v]);
        r.add_term(m, s);
    }
    return r;
}

Poly Poly::zero_vars(const std::vector<char>& kill) const {
    Poly r = zero(vs_, fld_);
    for (const auto& [m, c] : terms_) {
        bool dead = false;
        for (int v = 0; v < vs_.total(); ++v)
            if (kill[v] && m.e[v] != 0) {
                dead = true;
                break;
            }
        if (!dead) r.add_term(m, c);
    }
    return r;
}

Poly Poly::rename_vars(const std::vector<int>& image, const VarSet& target) const {
    Poly r = zero(target, fld_);
    for (const auto& [m, c] : terms_) {
        Monomial t(target.total());
        for (int v = 0; v < vs_.total(); ++v) {
            if (m.e[v] == 0) continue;
            if (image[v] < 0)
                throw InternalError("UnknownVariable",
                                    "rename hit an unmapped variable " + vs_.name(v));
            t.e[image[v]] += m.e[v];
        }
        r.add_term(t, c);
    }
    return r;
}

std::optional<long> Poly::homogeneous_degree(const std::vector<long>& w) const {
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
        long d = m.weighted_degree(w);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw InternalError("EmptyPolynomial", "zero polynomial has no leading term");
    return terms_.begin()->first;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (m.is_constant()) {
            os << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
        bool firstv = true;
        for (int v = 0; v < vs_.total(); ++v) {
            if (m.e[v] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << vs_.name(v);
            if (m.e[v] > 1) os << "^" << m.e[v];
        }
    }
    return os.str();
}

Poly determinant(const std::vector<std::vector<Poly>>& m, const VarSet& vs,
                 const FieldPtr& fld) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw InputError("ShapeMismatch", "determinant of a non-square matrix");
    if (n == 0) return Poly::constant(vs, fld, CycNum::one(fld));
    if (n == 1) return m[0][0];
    Poly det = Poly::zero(vs, fld);
    // expand along the first row
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> sub(n - 1);
        for (size_t i = 1; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                if (k != j) sub[i - 1].push_back(m[i][k]);
        Poly cof = m[0][j] * determinant(sub, vs, fld);
        if (j % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

Poly divide_linear_difference(const Poly& p, int va, int vb) {
    Poly quot = Poly::zero(p.varset(), p.field());
    Poly rem = p;
    while (true) {
        // highest va-degree term still present
        const Monomial* lead = nullptr;
        for (const auto& [m, c] : rem.terms()) {
            if (m.e[va] == 0) continue;
            if (!lead || m.e[va] > lead->e[va] ||
                (m.e[va] == lead->e[va] && MonoGreater{}(m, *lead)))
                lead = &m;
        }
        if (!lead) break;
        Monomial q = *lead;
        q.e[va] -= 1;
        CycNum c = rem.terms().at(*lead);
        quot.add_term(q, c);
        // rem -= c * q * (va - vb)
        Monomial qa = q, qb = q;
        qa.e[va] += 1;
        qb.e[vb] += 1;
        rem.add_term(qa, -c);
        rem.add_term(qb, c);
    }
    if (!rem.is_zero())
        throw InternalError("InexactDivision",
                            "division by a variable difference left a remainder");
    return quot;
}

Poly difference_derivative(const Poly& p, int i, Alphabet src, Alphabet dst) {
    const VarSet& vs = p.varset();
    if (i < 0 || i >= vs.base)
        throw InputError("UnknownVariable", "difference derivative slot out of range");
    if (static_cast<int>(dst) >= vs.alphabets)
        throw InternalError("AmbientMismatch", "target alphabet not present in the variable set");
    for (const auto& [m, c] : p.terms())
        for (int k = 0; k < vs.base; ++k)
            if (m.e[vs.var(dst, k)] != 0)
                throw InternalError("AmbientMismatch",
                                    "target alphabet already used by the operand");

    // l_k replaces the first k source variables by target variables
    auto l_op = [&](int k) {
        std::vector<int> image(vs.total());
        for (int v = 0; v < vs.total(); ++v) image[v] = v;
        for (int j = 0; j < k; ++j) image[vs.var(src, j)] = vs.var(dst, j);
        return p.rename_vars(image, vs);
    };
    Poly diff = l_op(i) - l_op(i + 1);
    return divide_linear_difference(diff, vs.var(src, i), vs.var(dst, i));
}

}  // namespace orbjac
