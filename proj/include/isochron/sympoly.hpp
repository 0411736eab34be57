/**
 * @file sympoly.hpp
 * @brief Sparse multivariate polynomials over GaussRat in the field
 *        coefficients p[a,b] (and their formal conjugates), with a
 *        syntactic conjugation involution, substitution and the
 *        integer weight grading.
 *
 * q[a,b] variables exist only before the reality rewriting; normalized
 * pipeline output is always over p-variables and their conjugates.
 */
#pragma once

#include "isochron/rat.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace isochron {

/// A coefficient indeterminate. The pair (a, b) indexes the homogeneous
/// component monomial x^{a+1} y^b; the component degree is a + b + 1.
struct CoeffVar {
    int a = 0;
    int b = 0;
    bool conjugated = false;
    bool qside = false;

    int component() const { return a + b + 1; }
    /// Grading weight: a - b for plain variables, negated under conjugation.
    int weight() const { return (conjugated ? -1 : 1) * (a - b); }
    CoeffVar conj() const {
        CoeffVar v = *this;
        v.conjugated = !v.conjugated;
        return v;
    }

    static CoeffVar p(int a, int b) { return CoeffVar{a, b, false, false}; }
    static CoeffVar pbar(int a, int b) { return CoeffVar{a, b, true, false}; }
    static CoeffVar q(int a, int b) { return CoeffVar{a, b, false, true}; }

    // Fixed total order: component degree, then p before q, then a,
    // then plain before conjugated. Gives deterministic printing.
    friend std::strong_ordering operator<=>(const CoeffVar& x, const CoeffVar& y) {
        if (auto c = x.component() <=> y.component(); c != 0) return c;
        if (auto c = x.qside <=> y.qside; c != 0) return c;
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.conjugated <=> y.conjugated;
    }
    friend bool operator==(const CoeffVar&, const CoeffVar&) = default;

    std::string str() const;  // "p[a,b]", "~p[a,b]", "q[a,b]", "~q[a,b]"
};

/// One canonical term: sorted variable multiset with a nonzero scalar.
struct Monomial {
    std::vector<CoeffVar> vars;  // sorted by the CoeffVar order
    GaussRat coeff;

    int degree() const { return static_cast<int>(vars.size()); }
    int weight() const;
};

class SymPoly {
public:
    SymPoly() = default;  // zero polynomial
    static SymPoly constant(GaussRat c);
    static SymPoly var(const CoeffVar& v);
    static SymPoly from_terms(std::vector<Monomial> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws std::logic_error otherwise.
    GaussRat constant_value() const;
    const std::vector<Monomial>& terms() const { return terms_; }
    int degree() const;
    std::vector<CoeffVar> variables() const;

    SymPoly conj() const;

    /// Substitutes variables by polynomials. A conjugated counterpart is
    /// derived for every entry; explicitly supplying both sides of a
    /// conjugate pair inconsistently throws std::invalid_argument.
    SymPoly substitute(const std::map<CoeffVar, SymPoly>& assignment) const;

    /// Full numeric evaluation; throws std::invalid_argument when a
    /// variable has no value (after conjugate completion).
    GaussRat evaluate(const std::map<CoeffVar, GaussRat>& assignment) const;

    /// Splits by total monomial weight; the parts sum back to the input.
    std::map<int, SymPoly> weight_grade() const;

    friend SymPoly operator-(const SymPoly& p);
    friend SymPoly operator+(const SymPoly& p, const SymPoly& q);
    friend SymPoly operator-(const SymPoly& p, const SymPoly& q);
    friend SymPoly operator*(const SymPoly& p, const SymPoly& q);
    friend SymPoly operator*(const GaussRat& c, const SymPoly& p);

    SymPoly& operator+=(const SymPoly& q) { return *this = *this + q; }
    SymPoly& operator-=(const SymPoly& q) { return *this = *this - q; }
    SymPoly& operator*=(const SymPoly& q) { return *this = *this * q; }

    friend bool operator==(const SymPoly& p, const SymPoly& q) {
        return p.terms_ == q.terms_;  // canonical form
    }

    /// Canonical text, e.g. "(3/2*i)*p[0,1]*~p[0,1] + (2/3*i)*p[-1,2]*~p[-1,2]".
    /// Repeated variables render as powers ("p[0,1]^3"); zero is "0".
    std::string str() const;
    static SymPoly parse(std::string_view text);

private:
    std::vector<Monomial> terms_;  // canonically ordered, nonzero coeffs

    void canonicalize();
};

bool operator==(const Monomial& a, const Monomial& b);

}  // namespace isochron
