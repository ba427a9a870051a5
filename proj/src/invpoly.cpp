#include "orbjac/invpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "orbjac/ratmat.hpp"

namespace orbjac {

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw InputError("SyntaxError", msg + " at position " + std::to_string(pos));
    }
    long read_uint() {
        skip_ws();
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number");
        long v = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000) fail("number too large");
            ++pos;
        }
        return v;
    }
};

}  // namespace

ParsedPolynomial parse(const std::string& text) {
    Scanner sc{text};
    ParsedPolynomial out;
    std::vector<std::map<int, int>> monos;

    while (true) {
        // term
        std::map<int, int> mono;
        while (true) {
            // factor
            if (sc.eof()) sc.fail("expected a variable");
            char c = sc.peek();
            if (isdigit(static_cast<unsigned char>(c)))
                throw InputError("NonUnitCoefficient",
                                 "numeric coefficient at position " + std::to_string(sc.pos) +
                                     "; all coefficients must be 1");
            if (c != 'x') sc.fail("expected 'x'");
            ++sc.pos;
            long idx = sc.read_uint();
            if (idx < 1) sc.fail("variable indices start at 1");
            long exp = 1;
            if (!sc.eof() && sc.peek() == '^') {
                ++sc.pos;
                exp = sc.read_uint();
            }
            mono[static_cast<int>(idx) - 1] += static_cast<int>(exp);
            out.nvars = std::max(out.nvars, static_cast<int>(idx));
            if (sc.eof()) break;
            char nxt = sc.peek();
            if (nxt == '*') {
                ++sc.pos;
                continue;
            }
            break;
        }
        monos.push_back(std::move(mono));
        if (sc.eof()) break;
        if (sc.peek() != '+') sc.fail("expected '+' or '*'");
        ++sc.pos;
    }

    for (const auto& mono : monos) {
        std::vector<int> row(out.nvars, 0);
        for (auto [v, e] : mono) row[v] = e;
        out.rows.push_back(std::move(row));
    }
    return out;
}

namespace {

// Assign to each monomial a head variable so that the monomial reads
// head^a * next with next either absent (diagonal row) or a single other
// variable of exponent 1. Returns head-per-monomial or empty on failure.
// Deterministic backtracking, candidates tried in ascending variable order.
bool assign_heads(const std::vector<std::vector<int>>& rows, int n,
                  std::vector<int>& head, std::vector<char>& used, size_t mi,
                  const std::function<bool(const std::vector<int>&)>& accept) {
    if (mi == rows.size()) return accept(head);
    const auto& row = rows[mi];
    std::vector<int> support;
    for (int v = 0; v < n; ++v)
        if (row[v] > 0) support.push_back(v);
    std::vector<int> candidates;
    if (support.size() == 1) {
        candidates.push_back(support[0]);
    } else if (support.size() == 2) {
        if (row[support[1]] == 1) candidates.push_back(support[0]);
        if (row[support[0]] == 1) candidates.push_back(support[1]);
    }
    for (int v : candidates) {
        if (used[v]) continue;
        head[mi] = v;
        used[v] = 1;
        if (assign_heads(rows, n, head, used, mi + 1, accept)) return true;
        used[v] = 0;
    }
    head[mi] = -1;
    return false;
}

}  // namespace

InvertiblePolynomial classify(const ParsedPolynomial& p) {
    InvertiblePolynomial ip;
    ip.n = p.nvars;
    ip.rows = p.rows;
    if (static_cast<int>(ip.rows.size()) != ip.n)
        throw InputError("NotSquare", std::to_string(ip.rows.size()) + " monomials in " +
                                          std::to_string(ip.n) + " variables");

    RatMat E(ip.n, std::vector<Rat>(ip.n));
    for (int i = 0; i < ip.n; ++i)
        for (int j = 0; j < ip.n; ++j) E[i][j] = ip.rows[i][j];
    Rat det = rat_det(E);
    if (det == 0)
        throw InputError("SingularExponentMatrix", "the exponent matrix is singular");
    ip.det = det.get_num();

    // weights: q = E^{-1} * (1,..,1); d = lcm of denominators
    std::vector<Rat> q = rat_solve(E, std::vector<Rat>(ip.n, Rat(1)));
    Int d = 1;
    for (const auto& qi : q) d = lcm(d, qi.get_den());
    ip.degree = d.get_si();
    for (const auto& qi : q) {
        Rat w = qi * Rat(d);
        if (w <= 0 || w >= d)
            throw InputError("NonPositiveWeights",
                             "weight system is not positive and reduced: w = " + rat_to_string(qi) +
                                 " * d");
        ip.weights.push_back(w.get_num().get_si());
    }

    // chain/loop decomposition via the head -> next functional graph
    auto try_decompose = [&](const std::vector<int>& head) -> bool {
        std::vector<int> next(ip.n, -1);
        std::vector<int> head_row(ip.n, -1);  // monomial headed by each variable
        for (size_t mi = 0; mi < ip.rows.size(); ++mi) {
            int h = head[mi];
            head_row[h] = static_cast<int>(mi);
            int nxt = h;  // diagonal rows point to themselves
            for (int v = 0; v < ip.n; ++v)
                if (v != h && ip.rows[mi][v] > 0) nxt = v;
            next[h] = nxt;
        }
        std::vector<int> indeg(ip.n, 0);
        for (int v = 0; v < ip.n; ++v)
            if (next[v] != v) ++indeg[next[v]];

        std::vector<char> seen(ip.n, 0);
        std::vector<Atom> atoms;
        // chains start at variables nothing points to
        for (int v = 0; v < ip.n; ++v) {
            if (indeg[v] != 0) continue;
            Atom a{Atom::Kind::Chain, {}, {}};
            int cur = v;
            while (true) {
                if (seen[cur]) return false;
                seen[cur] = 1;
                a.vars.push_back(cur);
                a.exps.push_back(ip.rows[head_row[cur]][cur]);
                if (next[cur] == cur) break;  // reached the diagonal tail
                cur = next[cur];
                if (indeg[cur] > 1) return false;  // two monomials feed one variable
            }
            atoms.push_back(std::move(a));
        }
        // whatever is left must consist of pure cycles
        for (int v = 0; v < ip.n; ++v) {
            if (seen[v]) continue;
            int start = v, cur = v;
            // rotate to the smallest index of the cycle
            int smallest = cur;
            do {
                if (next[cur] == cur || indeg[cur] != 1) return false;
                cur = next[cur];
                smallest = std::min(smallest, cur);
                if (seen[cur]) return false;
            } while (cur != start);
            Atom a{Atom::Kind::Loop, {}, {}};
            cur = smallest;
            do {
                seen[cur] = 1;
                a.vars.push_back(cur);
                a.exps.push_back(ip.rows[head_row[cur]][cur]);
                cur = next[cur];
            } while (cur != smallest);
            if (a.vars.size() < 2) return false;
            atoms.push_back(std::move(a));
        }
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& x, const Atom& y) { return x.vars[0] < y.vars[0]; });
        ip.atoms = std::move(atoms);
        return true;
    };

    std::vector<int> head(ip.rows.size(), -1);
    std::vector<char> used(ip.n, 0);
    if (!assign_heads(ip.rows, ip.n, head, used, 0, try_decompose))
        throw InputError("UnclassifiableShape",
                         "monomials do not form chains and loops");
    return ip;
}

Poly InvertiblePolynomial::realize(const FieldPtr& fld) const {
    VarSet vs = varset();
    Poly f = Poly::zero(vs, fld);
    for (const auto& row : rows) {
        Monomial m(vs.total());
        for (int v = 0; v < n; ++v) m.e[v] = row[v];
        f.add_term(m, CycNum::one(fld));
    }
    return f;
}

const Atom& InvertiblePolynomial::atom_of(int var) const {
    return atoms[atom_index_of(var)];
}

int InvertiblePolynomial::atom_index_of(int var) const {
    for (size_t i = 0; i < atoms.size(); ++i)
        for (int v : atoms[i].vars)
            if (v == var) return static_cast<int>(i);
    throw InternalError("UnknownVariable", "variable outside every atom");
}

}  // namespace orbjac
