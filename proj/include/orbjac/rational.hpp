#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "orbjac/errors.hpp"

namespace orbjac {

// Exact arithmetic types. mpq_class keeps values canonical (reduced,
// positive denominator), which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Reduce into the half-open interval [0,1).
inline Rat mod1(const Rat& r) {
    Int f = floor_div(r.get_num(), r.get_den());
    return r - Rat(f);
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::string rat_to_string(const Rat& r) {
    return r.get_den() == 1 ? r.get_num().get_str()
                            : r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p", "-p", "p/q". Throws SyntaxError on anything else.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InputError("SyntaxError", "empty rational");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw InputError("SyntaxError", "bad rational '" + s + "'");
    }
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw InputError("SyntaxError", "bad rational '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw InputError("SyntaxError", "zero denominator in '" + s + "'");
    return r;
}

}  // namespace orbjac
