#include "isochron/constraints.hpp"

#include <algorithm>

namespace isochron {

int FieldSpec::degree() const {
    int d = 1;
    for (const auto& [r, c] : components) d = std::max(d, r);
    return d;
}

bool FieldSpec::is_numeric() const {
    for (const auto& [r, c] : components)
        if (c.symbolic) return false;
    return true;
}

bool FieldSpec::is_trivial() const {
    if (!is_numeric()) return false;
    for (const auto& [r, c] : components)
        for (const auto& [v, z] : c.values)
            if (!z.is_zero()) return false;
    return true;
}

std::set<int> FieldSpec::component_degrees() const {
    std::set<int> out;
    for (const auto& [r, c] : components) out.insert(r);
    return out;
}

namespace {

// Coefficient indices (a, b) of the degree-r component: a + b = r - 1 with
// a in {-1, ..., r-1}.
std::vector<std::pair<int, int>> coeff_indices(int r) {
    if (r < 2) throw std::invalid_argument("coefficient indices: r must be >= 2");
    std::vector<std::pair<int, int>> out;
    for (int a = -1; a <= r - 1; ++a) out.emplace_back(a, r - 1 - a);
    return out;
}

// p[a,b] (a > b) = -((b+1)/(a+1)) ~p[b,a]
SymPoly dependent_rewrite(int a, int b, bool conjugated) {
    GaussRat c(BigRat(-(b + 1), a + 1));
    CoeffVar target = conjugated ? CoeffVar::p(b, a) : CoeffVar::pbar(b, a);
    return c * SymPoly::var(target);
}

}  // namespace

std::map<CoeffVar, SymPoly> reality_relations(int r) {
    std::map<CoeffVar, SymPoly> rel;
    for (auto [a, b] : coeff_indices(r)) {
        rel.emplace(CoeffVar::q(b, a), SymPoly::var(CoeffVar::pbar(a, b)));
        rel.emplace(CoeffVar::q(b, a).conj(), SymPoly::var(CoeffVar::p(a, b)));
    }
    return rel;
}

std::map<CoeffVar, SymPoly> hamiltonian_relations(int r) {
    std::map<CoeffVar, SymPoly> rel;
    for (auto [a, b] : coeff_indices(r)) {
        if (a > b && b >= 0) {
            rel.emplace(CoeffVar::p(a, b), dependent_rewrite(a, b, false));
            rel.emplace(CoeffVar::pbar(a, b), dependent_rewrite(a, b, true));
        } else if (a == b) {
            // purely imaginary central variable: ~p[c,c] = -p[c,c]
            rel.emplace(CoeffVar::pbar(a, a), GaussRat(-1) * SymPoly::var(CoeffVar::p(a, a)));
        }
    }
    return rel;
}

long long independent_count_real(int d) {
    return static_cast<long long>(d - 1) * (d + 4) / 2;
}

std::vector<CoeffVar> independent_set_component(int r, bool hamiltonian) {
    std::vector<CoeffVar> out;
    for (auto [a, b] : coeff_indices(r)) {
        if (!hamiltonian || a < b || a == b) out.push_back(CoeffVar::p(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CoeffVar> independent_set(int d, bool hamiltonian) {
    if (d < 2) throw std::invalid_argument("independent_set: d must be >= 2");
    std::vector<CoeffVar> out;
    for (int r = 2; r <= d; ++r) {
        auto c = independent_set_component(r, hamiltonian);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

bool is_central(const CoeffVar& v) { return !v.qside && v.a == v.b; }

bool is_independent(const CoeffVar& v, bool hamiltonian) {
    if (v.qside || v.conjugated) return false;
    if (v.a < -1 || v.b < -1 || v.a + v.b < 1) return false;
    if (!hamiltonian) return true;
    return v.a <= v.b;
}

std::map<CoeffVar, SymPoly> normalization_map(int r, bool hamiltonian) {
    std::map<CoeffVar, SymPoly> rel = reality_relations(r);
    if (hamiltonian) {
        auto ham = hamiltonian_relations(r);
        rel.insert(ham.begin(), ham.end());
        // The central variable is the kept representative of its pair; an
        // explicit identity stops substitution from deriving p -> -~p.
        if (r % 2 == 1) {
            CoeffVar c = CoeffVar::p((r - 1) / 2, (r - 1) / 2);
            rel.emplace(c, SymPoly::var(c));
        }
    }
    // Close the composition: a q rewrite may land on a dependent ~p.
    for (auto& [v, rhs] : rel) rhs = rhs.substitute(rel);
    return rel;
}

std::map<CoeffVar, SymPoly> normalization_map(const FieldSpec& spec) {
    std::map<CoeffVar, SymPoly> rel;
    for (const auto& [r, c] : spec.components) {
        auto m = normalization_map(r, spec.hamiltonian);
        rel.insert(m.begin(), m.end());
    }
    return rel;
}

SymPoly reduce(const SymPoly& poly, const FieldSpec& spec) {
    return poly.substitute(normalization_map(spec));
}

FieldSpec validate_assignment(const FieldSpec& spec) {
    for (const auto& [r, comp] : spec.components) {
        if (r < 2) throw ConstraintError("component degree must be >= 2");
        if (comp.symbolic) {
            if (!comp.values.empty())
                throw ConstraintError("symbolic component " + std::to_string(r) +
                                      " cannot carry values");
            continue;
        }
        for (const auto& [v, z] : comp.values) {
            if (v.component() != r)
                throw ConstraintError("coefficient " + v.str() + " does not belong to component " +
                                      std::to_string(r));
            if (v.qside || v.conjugated)
                throw DependentAssignmentError("coefficient " + v.str() +
                                               " is dependent (derived by the reality relations)");
            if (!is_independent(v, spec.hamiltonian))
                throw DependentAssignmentError("coefficient " + v.str() +
                                               " is dependent under the Hamiltonian relations");
            if (spec.hamiltonian && is_central(v) && !z.re().is_zero())
                throw RealityViolationError("central coefficient " + v.str() +
                                            " must be purely imaginary, got " + z.str());
        }
    }
    return spec;
}

std::map<CoeffVar, GaussRat> full_numeric_assignment(const FieldSpec& spec) {
    if (!spec.is_numeric())
        throw std::invalid_argument("full_numeric_assignment: spec has symbolic components");
    validate_assignment(spec);
    std::map<CoeffVar, GaussRat> out;
    for (const auto& [r, comp] : spec.components) {
        for (const auto& v : independent_set_component(r, spec.hamiltonian)) {
            auto it = comp.values.find(v);
            out.emplace(v, it != comp.values.end() ? it->second : GaussRat(0));
        }
        if (spec.hamiltonian) {
            for (auto [a, b] : coeff_indices(r)) {
                if (a > b && b >= 0) {
                    // p[a,b] = -((b+1)/(a+1)) conj(p[b,a])
                    GaussRat base = out.at(CoeffVar::p(b, a));
                    out.emplace(CoeffVar::p(a, b), GaussRat(BigRat(-(b + 1), a + 1)) * base.conj());
                }
            }
        }
    }
    return out;
}

OperatorSet operators_for(const FieldSpec& spec) {
    OperatorSet set;
    std::map<CoeffVar, GaussRat> numeric;
    bool any_numeric = false;
    for (const auto& [r, comp] : spec.components) {
        if (!comp.symbolic) {
            any_numeric = true;
            break;
        }
    }
    if (any_numeric) {
        if (!spec.is_numeric())
            throw std::invalid_argument("operators_for: mixed symbolic/numeric specs unsupported");
        numeric = full_numeric_assignment(spec);
    }
    for (const auto& [r, comp] : spec.components) {
        for (auto& op : make_operators(r)) {
            if (any_numeric) {
                op.p = SymPoly::constant(op.p.evaluate(numeric));
                op.q = SymPoly::constant(op.q.evaluate(numeric));
            }
            set.add(std::move(op));
        }
    }
    return set;
}

}  // namespace isochron
