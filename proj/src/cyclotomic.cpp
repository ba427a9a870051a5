#include "orbjac/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbjac {

namespace {

void trim(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, divisor monic.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size() && !num.empty()) {
        size_t shift = num.size() - den.size();
        Int c = num.back();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    if (!num.empty())
        throw InternalError("InexactDivision", "cyclotomic polynomial division left a remainder");
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int M) {
    if (M < 1) throw InputError("DomainError", "conductor must be positive");
    std::map<int, std::vector<Int>> phi;
    for (int d = 1; d <= M; ++d) {
        if (M % d != 0) continue;
        // t^d - 1
        std::vector<Int> p(d + 1, Int(0));
        p[0] = -1;
        p[d] = 1;
        for (auto& [e, q] : phi)
            if (d % e == 0) p = divide_exact(std::move(p), q);
        phi[d] = std::move(p);
    }
    return phi[M];
}

CycField::CycField(int conductor) : m_(conductor) {
    auto phi_int = cyclotomic_polynomial(conductor);
    deg_ = static_cast<int>(phi_int.size()) - 1;
    phi_.assign(phi_int.begin(), phi_int.end());

    maxpow_ = std::max<long>(2L * deg_ - 2, m_ - 1);
    // t^deg = -(lower part of Phi); higher powers by shift-and-reduce.
    std::vector<Rat> cur(deg_, Rat(0));
    for (int i = 0; i < deg_; ++i) cur[i] = -phi_[i];
    highpow_.push_back(cur);
    for (long k = deg_ + 1; k <= maxpow_; ++k) {
        std::vector<Rat> next(deg_, Rat(0));
        Rat top = cur[deg_ - 1];
        for (int i = deg_ - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg_; ++i) next[i] += top * highpow_[0][i];
        cur = std::move(next);
        highpow_.push_back(cur);
    }
}

std::vector<Rat> CycField::power_residue(long k) const {
    k %= m_;  // t^M = 1 mod Phi_M
    if (k < 0) k += m_;
    std::vector<Rat> r(deg_, Rat(0));
    if (k < deg_) {
        r[k] = 1;
        return r;
    }
    return highpow_[k - deg_];
}

CycNum::CycNum(FieldPtr fld, std::vector<Rat> coeffs) : fld_(std::move(fld)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != fld_->degree())
        throw InternalError("ShapeMismatch", "coefficient vector length does not match field degree");
}

CycNum CycNum::zero(const FieldPtr& fld) {
    return CycNum(fld, std::vector<Rat>(fld->degree(), Rat(0)));
}

CycNum CycNum::one(const FieldPtr& fld) {
    auto c = std::vector<Rat>(fld->degree(), Rat(0));
    c[0] = 1;
    return CycNum(fld, std::move(c));
}

CycNum CycNum::from_power(const FieldPtr& fld, long k) {
    return CycNum(fld, fld->power_residue(k));
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycNum::rational_part() const {
    if (!is_rational())
        throw InternalError("NotRational", "value has nonzero root-of-unity components");
    return c_[0];
}

void CycNum::promote(const FieldPtr& fld) {
    if (fld_) {
        if (fld && fld_->conductor() != fld->conductor())
            throw InputError("ConductorMismatch", "mixing elements of different cyclotomic fields");
        return;
    }
    if (!fld) return;
    Rat v = c_[0];
    c_.assign(fld->degree(), Rat(0));
    c_[0] = v;
    fld_ = fld;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (!fld_ && o.fld_) promote(o.fld_);
    CycNum rhs = o;
    rhs.promote(fld_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (!fld_ && o.fld_) promote(o.fld_);
    CycNum rhs = o;
    rhs.promote(fld_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

void CycNum::reduce_after_mul(std::vector<Rat>& prod) {
    int deg = fld_->degree();
    c_.assign(deg, Rat(0));
    for (size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        if (static_cast<int>(k) < deg) {
            c_[k] += prod[k];
        } else {
            auto res = fld_->power_residue(static_cast<long>(k));
            for (int i = 0; i < deg; ++i) c_[i] += prod[k] * res[i];
        }
    }
}

CycNum& CycNum::operator*=(const CycNum& o) {
    if (!fld_ && o.fld_) promote(o.fld_);
    if (!fld_) {  // both plain rationals
        c_[0] *= o.c_[0];
        return *this;
    }
    CycNum rhs = o;
    rhs.promote(fld_);
    std::vector<Rat> prod(c_.size() + rhs.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j) {
            if (rhs.c_[j] == 0) continue;
            prod[i + j] += c_[i] * rhs.c_[j];
        }
    }
    reduce_after_mul(prod);
    return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
    CycNum d = a;
    d -= b;
    return d.is_zero();
}

namespace {

void trim_rat(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// quotient-remainder of rational polynomials, den nonzero
std::pair<std::vector<Rat>, std::vector<Rat>> divrem(std::vector<Rat> num,
                                                     const std::vector<Rat>& den) {
    std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    Rat lead = den.back();
    while (num.size() >= den.size() && !num.empty()) {
        size_t shift = num.size() - den.size();
        Rat c = num.back() / lead;
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim_rat(num);
    }
    return {std::move(q), std::move(num)};
}

}  // namespace

CycNum CycNum::inverse() const {
    if (is_zero()) throw InputError("DivisionByZero", "inverse of zero");
    if (!fld_) {
        CycNum r;
        r.c_[0] = Rat(1) / c_[0];
        return r;
    }
    // extended Euclid: s*a + t*Phi = gcd; Phi irreducible so gcd is a unit
    std::vector<Rat> r0 = fld_->modulus();
    std::vector<Rat> r1 = c_;
    trim_rat(r1);
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of a
    while (!r1.empty()) {
        auto [q, r2] = divrem(r0, r1);
        // s2 = s0 - q*s1
        std::vector<Rat> s2 = s0;
        if (s2.size() < q.size() + s1.size() - 1) s2.resize(q.size() + s1.size() - 1, Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        trim_rat(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw InternalError("NotInvertible", "gcd with the cyclotomic modulus is not a unit");
    Rat scale = Rat(1) / r0[0];
    std::vector<Rat> inv(fld_->degree(), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) inv[i] = s0[i] * scale;
    return CycNum(fld_, std::move(inv));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum base = *this;
    CycNum acc = fld_ ? one(fld_) : CycNum(Rat(1));
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rat v = c_[k];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (k == 0) {
            os << rat_to_string(v);
        } else {
            if (v != 1) os << rat_to_string(v) << "*";
            os << "e[" << k << "/" << fld_->conductor() << "]";
        }
    }
    return os.str();
}

CycNum root_of_unity(const FieldPtr& fld, const Rat& alpha) {
    Rat scaled = alpha * fld->conductor();
    if (!is_integer(scaled))
        throw InputError("DenominatorMismatch",
                         "e[" + rat_to_string(alpha) + "] does not lie in Q(zeta_" +
                             std::to_string(fld->conductor()) + ")");
    Int k = scaled.get_num() % fld->conductor();
    return CycNum::from_power(fld, k.get_si());
}

}  // namespace orbjac
