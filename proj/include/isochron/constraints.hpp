/**
 * @file constraints.hpp
 * @brief Reality and Hamiltonian coefficient relations, canonical
 *        independent coefficient sets, field specifications and their
 *        validation.
 *
 * Reality rewrites every q-side coefficient onto the mirrored conjugate
 * p-variable (q[b,a] = ~p[a,b], edges included). The Hamiltonian relations
 * additionally eliminate p[a,b] for a > b via
 *     p[a,b] = -((b+1)/(a+1)) ~p[b,a]
 * and force the central variable of an odd-degree component purely
 * imaginary (~p[c,c] = -p[c,c]). The canonical independent set of a
 * Hamiltonian component is therefore { p[a,b] : a < b } plus, for odd r,
 * the central p[c,c].
 */
#pragma once

#include "isochron/operators.hpp"
#include "isochron/sympoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace isochron {

struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Assignment to a coefficient that is derived from the independent set.
struct DependentAssignmentError : ConstraintError {
    using ConstraintError::ConstraintError;
};
/// Value incompatible with the reality/Hamiltonian structure (e.g. a
/// central coefficient with nonzero real part).
struct RealityViolationError : ConstraintError {
    using ConstraintError::ConstraintError;
};

struct ComponentAssignment {
    bool symbolic = true;
    std::map<CoeffVar, GaussRat> values;  // independent p-variables only
};

struct FieldSpec {
    bool hamiltonian = false;
    std::map<int, ComponentAssignment> components;  // degree r -> assignment

    int degree() const;        // max component degree; 1 when empty
    bool is_numeric() const;   // no symbolic component
    bool is_trivial() const;   // numeric with every coefficient zero
    std::set<int> component_degrees() const;
};

/// q[b,a] -> ~p[a,b] for every coefficient index (a,b) of the component.
std::map<CoeffVar, SymPoly> reality_relations(int r);

/// Rewriting of the dependent p-variables of a Hamiltonian component onto
/// the canonical independent set (see file comment). Idempotent.
std::map<CoeffVar, SymPoly> hamiltonian_relations(int r);

/// N(d) = (d-1)(d+4)/2, the real (non-Hamiltonian) coefficient count.
long long independent_count_real(int d);

std::vector<CoeffVar> independent_set_component(int r, bool hamiltonian);
/// Deterministic list over components 2..d.
std::vector<CoeffVar> independent_set(int d, bool hamiltonian);
bool is_independent(const CoeffVar& v, bool hamiltonian);
bool is_central(const CoeffVar& v);

/// Full rewriting map (q-variables, dependent p-variables and their
/// conjugates) onto the independent set of the component.
std::map<CoeffVar, SymPoly> normalization_map(int r, bool hamiltonian);
std::map<CoeffVar, SymPoly> normalization_map(const FieldSpec& spec);

/// Substitutes the normalization map; the result involves independent
/// variables only.
SymPoly reduce(const SymPoly& poly, const FieldSpec& spec);

/// Checks that only independent coefficients carry assignments and that
/// central values are purely imaginary; returns the spec unchanged.
/// Throws DependentAssignmentError / RealityViolationError.
FieldSpec validate_assignment(const FieldSpec& spec);

/// Numeric value of every p-variable (independent and derived) of the
/// spec's components; requires a numeric spec.
std::map<CoeffVar, GaussRat> full_numeric_assignment(const FieldSpec& spec);

/// Operators for all components of the spec: symbolic components yield
/// symbolic coefficients (reality applied), numeric components constant
/// ones (reality and Hamiltonian relations applied).
OperatorSet operators_for(const FieldSpec& spec);

}  // namespace isochron
