/**
 * @file correction.hpp
 * @brief Assembly of the depth-graded correction terms: the
 *        bracket/projection route, the independent composition oracle and
 *        the closed form for fields of consecutive component degrees.
 *
 * Both routes share the mould and the symbolic ring but combine operators
 * differently; their exact agreement is the binding correctness check.
 * Word-level parallelism is available (ISOCHRON_THREADS); partial results
 * are folded in word order, so output is identical for any schedule.
 */
#pragma once

#include "isochron/constraints.hpp"
#include "isochron/mould.hpp"

#include <map>
#include <vector>

namespace isochron {

/// Per-length projection factor for the bracket route (1/length).
BigRat length_factor(int len);

struct CorrectionTerm {
    int depth = 0;
    /// Raw length-graded parts (no projection factor), reduced onto the
    /// independent variables.
    std::map<int, SymPoly> parts;
    /// Finer breakdown keyed by (length, sorted source component degrees),
    /// with the projection factor applied.
    std::map<std::pair<int, std::vector<int>>, SymPoly> component_parts;
    /// Assembled scalar: sum over lengths of length_factor(i) * parts[i].
    SymPoly total;
    /// The y d/dy side, assembled from the Q coefficients; equals
    /// total.conj() for real Hamiltonian fields.
    SymPoly total_q;

    SymPoly normalized_part(int len) const;
};

/// Bracket/projection assembly at the given even depth (>= 2).
CorrectionTerm correction_term(const FieldSpec& spec, int depth);

/// Composition-route value: sum over resonant words of the mould value
/// times the composed operators applied to the seed x, coefficient of
/// x^{p+1} y^p. No projection factors are involved.
SymPoly correction_oracle(const FieldSpec& spec, int depth);

/// Numeric value of the assembled correction scalar at the given depth.
GaussRat correction_value(const FieldSpec& spec, int depth);

/// Closed form for a Hamiltonian field with components in degrees
/// r..2r-1 at depth 2(r-1):
///   p[r-1,r-1] + i( sum_{k>floor((r+1)/2)} r(r+1)/(r-k+1)^2 |p[k-1,r-k]|^2
///                   + r/(r+1) |p[-1,r]|^2 )
/// with the central term present only when degree 2r-1 is included.
/// The result is reduced onto the independent variables.
SymPoly fundamental_lemma_value(int r, const FieldSpec& spec);

/// Assembly at an odd depth; identically zero for real Hamiltonian fields
/// (no resonant words of odd depth exist).
SymPoly odd_depth_term(const FieldSpec& spec, int depth);

}  // namespace isochron
