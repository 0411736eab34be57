/**
 * @file operators.hpp
 * @brief Homogeneous differential operators B_n, the nested-bracket
 *        coefficient recursion and the operator-composition oracle.
 *
 * Every operator is stored in the uniform shape x^{n1} y^{n2} (p x d/dx +
 * q y d/dy); the edge letters (-1, r) and (r, -1) carry one zero
 * coefficient so that application is the single rule scalar = l*p + k*q.
 */
#pragma once

#include "isochron/alphabet.hpp"
#include "isochron/sympoly.hpp"

#include <map>
#include <vector>

namespace isochron {

struct HomOp {
    Letter letter;
    SymPoly p;  // coefficient of the x d/dx part
    SymPoly q;  // coefficient of the y d/dy part
};

/// Symbolic operators of the degree-r component with the reality relations
/// applied: the q-side coefficient of letter (a, b) is ~p[b,a]. Hamiltonian
/// relations are not applied here (see constraints).
std::vector<HomOp> make_operators(int r);

/// Operators with independent q-variables, before any rewriting.
std::vector<HomOp> make_operators_raw(int r);

/// Letter-indexed lookup over the operators of one or more components.
class OperatorSet {
public:
    OperatorSet() = default;
    explicit OperatorSet(std::vector<HomOp> ops);
    void add(HomOp op);
    /// Throws std::out_of_range for a letter with no operator.
    const HomOp& at(const Letter& n) const;
    bool contains(const Letter& n) const { return ops_.count(n) > 0; }
    std::size_t size() const { return ops_.size(); }

private:
    std::map<Letter, HomOp> ops_;
};

struct BracketCoeffs {
    SymPoly p;
    SymPoly q;
    Letter total;  // componentwise letter sum |n|
};

/// Coefficients of the nested Lie bracket of the word's operators, by the
/// length recursion
///   P(n.w) = (|w|1 - n1) p_n P(w) + |w|2 q_n P(w) - n2 p_n Q(w)
///   Q(n.w) = (|w|2 - n2) q_n Q(w) + |w|1 p_n Q(w) - n1 q_n P(w)
/// with the single-letter base case P = p_n, Q = q_n. Throws
/// std::invalid_argument on an empty word, std::out_of_range on an
/// unknown letter.
BracketCoeffs bracket_coeffs(const Word& w, const OperatorSet& ops);

struct ApplyResult {
    SymPoly scalar;
    int l = 0;
    int k = 0;
};

/// B_n(x^l y^k) = (l p + k q) x^{n1+l} y^{n2+k}.
ApplyResult op_apply(const HomOp& op, int l, int k);

/// B_{n1} o ... o B_{nr} applied rightmost-first to the seed monomial
/// x^l y^k; the empty word is the identity.
ApplyResult compose_apply(const Word& w, const OperatorSet& ops, int l, int k);

}  // namespace isochron
