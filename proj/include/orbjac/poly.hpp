#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbjac/cyclotomic.hpp"

namespace orbjac {

// The x / y / z alphabets of the doubled and tripled polynomial rings.
enum class Alphabet : int { X = 0, Y = 1, Z = 2 };

// An ordered list of named variables: `base` variables per alphabet,
// `alphabets` copies. Variable id of a_i is int(a)*base + i (0-based i).
struct VarSet {
    int base = 0;
    int alphabets = 1;

    int total() const { return base * alphabets; }
    int var(Alphabet a, int i) const { return static_cast<int>(a) * base + i; }
    Alphabet alphabet_of(int v) const { return static_cast<Alphabet>(v / base); }
    int base_index(int v) const { return v % base; }
    std::string name(int v) const;

    bool operator==(const VarSet&) const = default;
};

struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    long degree() const;
    long weighted_degree(const std::vector<long>& w) const;
    bool is_constant() const { return degree() == 0; }
    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Fixed total order used everywhere a normal form needs leading terms:
// graded lexicographic, scanning variables by ascending index.
struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, CycNum, MonoGreater>;

// Sparse multivariate polynomial over a cyclotomic field. Immutable in
// spirit: all operations return fresh values.
class Poly {
public:
    Poly() = default;

    static Poly zero(const VarSet& vs, const FieldPtr& fld);
    static Poly constant(const VarSet& vs, const FieldPtr& fld, const CycNum& c);
    static Poly variable(const VarSet& vs, const FieldPtr& fld, int v);
    static Poly monomial(const VarSet& vs, const FieldPtr& fld, Monomial m,
                         const CycNum& c);

    const VarSet& varset() const { return vs_; }
    const FieldPtr& field() const { return fld_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const CycNum& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const CycNum& c);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Formal partial derivative with respect to variable v.
    Poly partial_derivative(int v) const;

    /// Exact composition. Every variable occurring in *this must be covered;
    /// all images must share the target VarSet.
    Poly substitute(const std::map<int, Poly>& images, const VarSet& target) const;

    /// Diagonal substitution x_v -> mult[v] * x_v.
    Poly scale_vars(const std::vector<CycNum>& mult) const;

    /// Set the flagged variables to zero.
    Poly zero_vars(const std::vector<char>& kill) const;

    /// Re-index variables; image[v] = -1 means v must not occur.
    Poly rename_vars(const std::vector<int>& image, const VarSet& target) const;

    /// Weighted degree when all terms agree on it, otherwise nullopt.
    std::optional<long> homogeneous_degree(const std::vector<long>& w) const;

    const Monomial& leading_monomial() const;

    std::string str() const;

private:
    void check_compatible(const Poly& o) const;

    VarSet vs_{};
    FieldPtr fld_;
    TermMap terms_;
};

/// Exact determinant by cofactor expansion; the empty matrix gives 1.
Poly determinant(const std::vector<std::vector<Poly>>& m, const VarSet& vs,
                 const FieldPtr& fld);

/// Exact division by (va - vb); throws InexactDivision when a remainder
/// survives, which cannot happen on the difference-derivative path.
Poly divide_linear_difference(const Poly& p, int va, int vb);

/// Difference derivative in slot i (0-based) of the `src` alphabet, target
/// alphabet `dst`: (l_i(p) - l_{i+1}(p)) / (src_i - dst_i), where l_k
/// replaces the first k src variables by dst variables. The dst alphabet
/// must be unused in p.
Poly difference_derivative(const Poly& p, int i, Alphabet src, Alphabet dst);

}  // namespace orbjac
