#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orbjac/rational.hpp"

namespace orbjac {

/// Coefficients of the M-th cyclotomic polynomial, ascending powers, monic.
/// Computed by exact division of t^M - 1 by the cyclotomic polynomials of
/// the proper divisors of M.
std::vector<Int> cyclotomic_polynomial(int M);

// A fixed cyclotomic field Q(zeta_M), elements represented as residues
// modulo Phi_M. Shared by every scalar of one computation.
class CycField {
public:
    explicit CycField(int conductor);

    int conductor() const { return m_; }
    int degree() const { return deg_; }

    /// Residue of t^k modulo Phi_M as a coefficient vector of length degree().
    /// k may be any non-negative exponent; it is first reduced mod M.
    std::vector<Rat> power_residue(long k) const;

    const std::vector<Rat>& modulus() const { return phi_; }

private:
    int m_;
    int deg_;
    std::vector<Rat> phi_;                    // monic, ascending
    std::vector<std::vector<Rat>> highpow_;   // t^k mod Phi_M for k in [deg_, maxpow_]
    long maxpow_;
};

using FieldPtr = std::shared_ptr<const CycField>;

// Immutable element of Q(zeta_M). A default-constructed or Rat-constructed
// value is a plain rational not yet attached to a field; it promotes
// automatically when combined with an attached value.
class CycNum {
public:
    CycNum() : c_{Rat(0)} {}
    CycNum(const Rat& r) : c_{r} {}
    CycNum(long n) : c_{Rat(n)} {}
    CycNum(FieldPtr fld, std::vector<Rat> coeffs);

    static CycNum zero(const FieldPtr& fld);
    static CycNum one(const FieldPtr& fld);
    /// Class of t^k mod Phi_M.
    static CycNum from_power(const FieldPtr& fld, long k);

    const FieldPtr& field() const { return fld_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;     // supported on the t^0 coordinate only
    Rat rational_part() const;    // valid when is_rational()

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Multiplicative inverse via extended Euclid against Phi_M.
    CycNum inverse() const;
    CycNum pow(long e) const;

    /// Human readable form as a combination of e[k/M].
    std::string str() const;

private:
    void promote(const FieldPtr& fld);
    void reduce_after_mul(std::vector<Rat>& prod);

    FieldPtr fld_;          // null while the value is a bare rational
    std::vector<Rat> c_;    // length degree() when attached, else 1
};

inline CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

/// e[alpha] = exp(2*pi*i*alpha) as the class of t^k, k = alpha*M mod M.
/// Throws DenominatorMismatch unless alpha*M is an integer.
CycNum root_of_unity(const FieldPtr& fld, const Rat& alpha);

}  // namespace orbjac
