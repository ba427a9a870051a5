#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbjac/invpoly.hpp"

namespace orbjac {

// A diagonal symmetry (e[a_1], ..., e[a_n]) stored by its phase vector,
// each a_i reduced into [0,1). Fixed-locus data is cached on construction.
class GroupElement {
public:
    explicit GroupElement(std::vector<Rat> alphas);
    static GroupElement identity(int n);

    int n() const { return static_cast<int>(a_.size()); }
    const std::vector<Rat>& alphas() const { return a_; }
    const Rat& alpha(int i) const { return a_[i]; }

    const std::vector<int>& fixed() const { return fixed_; }   // I_g
    const std::vector<int>& moved() const { return moved_; }   // I_g^c
    int codim() const { return static_cast<int>(moved_.size()); }  // d_g
    uint32_t moved_mask() const { return moved_mask_; }
    const Rat& age() const { return age_; }
    bool is_identity() const { return moved_.empty(); }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;

    bool operator==(const GroupElement& o) const { return a_ == o.a_; }
    bool operator!=(const GroupElement& o) const { return !(a_ == o.a_); }
    bool operator<(const GroupElement& o) const;  // lexicographic

    long order() const;  // smallest k >= 1 with k*a integral

    std::string str() const;  // "1/3,0,2/3"
    static GroupElement from_string(const std::string& text, int n);

private:
    std::vector<Rat> a_;
    std::vector<int> fixed_, moved_;
    uint32_t moved_mask_ = 0;
    Rat age_;
};

class Group {
public:
    Group() = default;
    explicit Group(std::vector<GroupElement> elems);  // sorts and deduplicates

    size_t order() const { return elems_.size(); }
    const GroupElement& operator[](size_t i) const { return elems_[i]; }
    const std::vector<GroupElement>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(const GroupElement& g) const;
    size_t index_of(const GroupElement& g) const;  // throws if absent

    /// Exponent of the group: lcm of element orders.
    long exponent() const;

private:
    std::vector<GroupElement> elems_;
};

/// Does g satisfy E * alpha = 0 (mod Z^n)?
bool is_symmetry(const InvertiblePolynomial& ip, const GroupElement& g);

/// All diagonal symmetries of ip, enumerated as the closure of the columns
/// of E^{-1} modulo Z^n. |G_f| = |det E| and the fixed-locus shape of every
/// element is validated against the atom decomposition.
Group maximal_group(const InvertiblePolynomial& ip);

/// Closure of the generators; throws NotASymmetry when a generator does not
/// preserve ip.
Group generated_subgroup(const std::vector<GroupElement>& gens,
                         const InvertiblePolynomial& ip);

/// Elements of integer age, i.e. the intersection with SL(n, C).
Group sl_filter(const Group& g);

}  // namespace orbjac
