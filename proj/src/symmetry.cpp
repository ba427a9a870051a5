#include "orbjac/symmetry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "orbjac/ratmat.hpp"

namespace orbjac {

GroupElement::GroupElement(std::vector<Rat> alphas) : a_(std::move(alphas)) {
    if (a_.size() > 31)
        throw InputError("DomainError", "more than 31 variables are not supported");
    age_ = 0;
    for (int i = 0; i < n(); ++i) {
        a_[i] = mod1(a_[i]);
        age_ += a_[i];
        if (a_[i] == 0) {
            fixed_.push_back(i);
        } else {
            moved_.push_back(i);
            moved_mask_ |= 1u << i;
        }
    }
}

GroupElement GroupElement::identity(int n) {
    return GroupElement(std::vector<Rat>(n, Rat(0)));
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    std::vector<Rat> s(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) s[i] = a_[i] + o.a_[i];
    return GroupElement(std::move(s));
}

GroupElement GroupElement::inverse() const {
    std::vector<Rat> s(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) s[i] = -a_[i];
    return GroupElement(std::move(s));
}

bool GroupElement::operator<(const GroupElement& o) const {
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] != o.a_[i]) return a_[i] < o.a_[i];
    }
    return false;
}

long GroupElement::order() const {
    Int l = 1;
    for (const auto& x : a_) l = lcm(l, x.get_den());
    return l.get_si();
}

std::string GroupElement::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(a_[i]);
    }
    return os.str();
}

GroupElement GroupElement::from_string(const std::string& text, int n) {
    std::vector<Rat> a;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) a.push_back(rat_from_string(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (static_cast<int>(a.size()) != n)
        throw InputError("ShapeMismatch", "expected " + std::to_string(n) +
                                              " phase components, got " +
                                              std::to_string(a.size()));
    return GroupElement(std::move(a));
}

Group::Group(std::vector<GroupElement> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool Group::contains(const GroupElement& g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g);
}

size_t Group::index_of(const GroupElement& g) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
    if (it == elems_.end() || !(*it == g))
        throw InternalError("UnknownElement", "element not in the group: " + g.str());
    return static_cast<size_t>(it - elems_.begin());
}

long Group::exponent() const {
    Int l = 1;
    for (const auto& g : elems_) l = lcm(l, Int(g.order()));
    return l.get_si();
}

bool is_symmetry(const InvertiblePolynomial& ip, const GroupElement& g) {
    for (const auto& row : ip.rows) {
        Rat s = 0;
        for (int j = 0; j < ip.n; ++j) s += Rat(row[j]) * g.alpha(j);
        if (!is_integer(s)) return false;
    }
    return true;
}

namespace {

Group closure(std::vector<GroupElement> gens, int n) {
    std::set<GroupElement> seen;
    std::vector<GroupElement> queue;
    auto push = [&](const GroupElement& g) {
        if (seen.insert(g).second) queue.push_back(g);
    };
    push(GroupElement::identity(n));
    for (const auto& g : gens) push(g);
    for (size_t i = 0; i < queue.size(); ++i) {
        for (const auto& g : gens) push(queue[i] * g);
        push(queue[i].inverse());
    }
    return Group(std::vector<GroupElement>(seen.begin(), seen.end()));
}

// Proposition-level shape of fixed loci: on a chain atom the moved
// variables of any non-identity element form a prefix; on a loop atom they
// are nothing or everything.
void validate_fixed_shape(const InvertiblePolynomial& ip, const GroupElement& g) {
    if (g.is_identity()) return;
    for (const auto& atom : ip.atoms) {
        std::vector<char> m;
        for (int v : atom.vars) m.push_back(g.alpha(v) != 0);
        if (atom.kind == Atom::Kind::Chain) {
            for (size_t i = 1; i < m.size(); ++i)
                if (m[i] && !m[i - 1])
                    throw InternalError("FixedLocusShape",
                                        "chain fixed locus is not a prefix for " + g.str());
        } else {
            bool all = std::all_of(m.begin(), m.end(), [](char c) { return c; });
            bool none = std::none_of(m.begin(), m.end(), [](char c) { return c; });
            if (!all && !none)
                throw InternalError("FixedLocusShape",
                                    "loop fixed locus is neither empty nor full for " + g.str());
        }
    }
}

}  // namespace

Group maximal_group(const InvertiblePolynomial& ip) {
    RatMat E(ip.n, std::vector<Rat>(ip.n));
    for (int i = 0; i < ip.n; ++i)
        for (int j = 0; j < ip.n; ++j) E[i][j] = ip.rows[i][j];
    RatMat inv = rat_inverse(E);

    std::vector<GroupElement> gens;
    for (int col = 0; col < ip.n; ++col) {
        std::vector<Rat> a(ip.n);
        for (int rowi = 0; rowi < ip.n; ++rowi) a[rowi] = inv[rowi][col];
        gens.push_back(GroupElement(std::move(a)));
    }
    Group g = closure(std::move(gens), ip.n);

    Int expected = ip.det < 0 ? Int(-ip.det) : ip.det;
    if (Int(static_cast<long>(g.order())) != expected)
        throw InternalError("GroupOrderMismatch",
                            "enumerated " + std::to_string(g.order()) +
                                " symmetries, |det E| = " + expected.get_str());
    for (const auto& e : g) validate_fixed_shape(ip, e);
    return g;
}

Group generated_subgroup(const std::vector<GroupElement>& gens,
                         const InvertiblePolynomial& ip) {
    for (const auto& g : gens) {
        if (g.n() != ip.n)
            throw InputError("ShapeMismatch", "generator has wrong length: " + g.str());
        if (!is_symmetry(ip, g))
            throw InputError("NotASymmetry", g.str() + " does not preserve the polynomial");
    }
    return closure(gens, ip.n);
}

Group sl_filter(const Group& g) {
    std::vector<GroupElement> kept;
    for (const auto& e : g)
        if (is_integer(e.age())) kept.push_back(e);
    return Group(std::move(kept));
}

}  // namespace orbjac
