/**
 * @file analysis.hpp
 * @brief Isochronicity decision procedure over bounded depth, the
 *        structural nonisochronicity predicates, and a randomized
 *        cross-check harness.
 *
 * The checker walks the even depths (odd ones vanish identically for real
 * Hamiltonian fields) and reports the first nonzero correction value as a
 * nonisochronicity witness; the test is exact, no tolerances anywhere.
 */
#pragma once

#include "isochron/correction.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace isochron {

struct Verdict {
    enum class Kind { Nonisochronous, UndeterminedUpTo, LinearizableTrivially };
    Kind kind = Kind::UndeterminedUpTo;
    int depth = 0;      // witness depth, or the bound that was exhausted
    GaussRat witness;   // nonzero exactly when Nonisochronous
    std::vector<std::pair<int, GaussRat>> evaluated;  // depth -> value table

    std::string str() const;
};

/// Evaluates correction values at depths 2, 4, ... up to max_depth and
/// stops at the first nonzero one. Requires a numeric spec.
Verdict check_isochronous(const FieldSpec& spec, int max_depth);

/// Hypothesis classes of the structural nonisochronicity statements.
///   T1a : even degree 2n, p[i,i] = 0 for i < r and Im(p[r,r]) > 0, r < n-1
///   T1b : even degree 2n, p[i,i] = 0 for i = 1..n-1
///   T2  : support within {k..2l}, k >= 2, l <= k-1
///   T3  : support within {k..2l} union of the bands {c_m..2(c_m-1)},
///         c_1 = 4l, c_m = 4(c_{m-1}-1)
///   T4i : support {k..2l} + {2l+1} + {r..r+n}, r >= 2l+2, Im(p[l,l]) > 0
///   T4ii: support {k..2l} + {4l-1} + {r..r+n}, r >= 4l, X_{2l} nontrivial,
///         Im(p[2l-1,2l-1]) > 0
///   Weak: only even-degree components present
struct TheoremCondition {
    enum class Id { T1a, T1b, T2, T3, T4i, T4ii, Weak };
    Id id = Id::Weak;
    int k = 0;
    int l = 0;
    int m = 0;  // number of extra bands for T3
    int r = 0;  // T1a pivot index / T4 trailing block start
    int n = 0;  // half-degree for T1a/T1b/Weak

    static std::vector<long long> c_sequence(long long l, int m);
};

struct TheoremCheck {
    bool applies = false;
    std::string explanation;
};

/// Checks only the stated structural hypotheses -- a negative result means
/// "no guarantee", never "isochronous".
TheoremCheck theorem_applies(const FieldSpec& spec, const TheoremCondition& cond);

struct SampleOptions {
    std::set<CoeffVar> force_zero;
    std::map<CoeffVar, GaussRat> force;
    bool nonzero_lowest_component = true;
};

/// Random numeric Hamiltonian spec with small-rational coefficients;
/// centrals are drawn purely imaginary.
FieldSpec sample_hamiltonian_spec(const std::set<int>& components, std::mt19937_64& rng,
                                  const SampleOptions& opts = {});

/// Coefficient rescaling v -> mu^{weight(v)} v for a unit-modulus mu
/// (the torus action); throws std::invalid_argument when |mu| != 1.
FieldSpec rescale(const FieldSpec& spec, const GaussRat& mu);

struct ProbeReport {
    int samples = 0;
    int nonisochronous = 0;
    std::vector<int> exhausted_sample_ids;     // flagged for inspection
    std::vector<std::pair<int, int>> witness_depths;  // sample id -> depth
    bool all_nonisochronous() const { return nonisochronous == samples; }
    std::string str() const;
};

/// Samples random specs satisfying the hypothesis class and runs the
/// checker on each; samples exhausting max_depth are reported, not failed.
ProbeReport consistency_probe(const TheoremCondition& cond, int samples, int max_depth,
                              unsigned long seed);

}  // namespace isochron
