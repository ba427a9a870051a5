#pragma once

#include <string>
#include <vector>

#include "orbjac/poly.hpp"

namespace orbjac {

// Raw parse result: one exponent row per monomial, in input order. All
// coefficients are 1 by the grammar (explicit coefficients are rejected).
struct ParsedPolynomial {
    int nvars = 0;
    std::vector<std::vector<int>> rows;
};

/// Parse the polynomial grammar
///   poly := term ('+' term)* ; term := factor ('*' factor)* ;
///   factor := var ('^' uint)? ; var := 'x' uint
/// Whitespace is ignored. Throws SyntaxError (with position) or
/// NonUnitCoefficient.
ParsedPolynomial parse(const std::string& text);

struct Atom {
    enum class Kind { Chain, Loop };
    Kind kind;
    std::vector<int> vars;  // 0-based variable indices: head->tail for chains,
                            // cycle order starting at the smallest for loops
    std::vector<int> exps;  // a_1..a_m

    int size() const { return static_cast<int>(vars.size()); }
};

struct InvertiblePolynomial {
    int n = 0;
    std::vector<std::vector<int>> rows;  // exponent matrix E, input order
    Int det;
    std::vector<long> weights;  // smallest positive integer solution of E*w = d*1
    long degree = 0;            // d
    std::vector<Atom> atoms;    // ordered by smallest variable index

    /// The polynomial itself, with unit coefficients.
    Poly realize(const FieldPtr& fld) const;
    VarSet varset() const { return VarSet{n, 1}; }

    /// Atom containing the given variable.
    const Atom& atom_of(int var) const;
    int atom_index_of(int var) const;
};

/// Build the exponent matrix, check invertibility, solve for weights and
/// decompose into chain/loop atoms. Throws NotSquare,
/// SingularExponentMatrix, NonPositiveWeights or UnclassifiableShape.
InvertiblePolynomial classify(const ParsedPolynomial& p);

inline InvertiblePolynomial classify(const std::string& text) { return classify(parse(text)); }

}  // namespace orbjac
