/**
 * @file mould.hpp
 * @brief The correction mould Carr on weight sequences: closed forms for
 *        lengths 1-3, the variance recursion beyond, memoized evaluation,
 *        mould composition and the alternality defect.
 *
 * The mould value depends only on the sequence of letter weights, so the
 * cache key is the integer weight sequence; the eigenvalue factor i is
 * reattached internally where the formulas need the actual weights.
 */
#pragma once

#include "isochron/alphabet.hpp"
#include "isochron/rat.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <vector>

namespace isochron {

/// Integer weight sequence of a word; the only data the mould depends on.
using WeightKey = std::vector<int>;

WeightKey key_of(const Word& w);

/// Closed forms on actual (complex) weights.
///   C1(z1) = 1 if z1 = 0, else 0
///   C2(z1, z2) = -1/z1 if z1 + z2 = 0 and z1 != 0, else 0
///   C3(z1, z2, z3) = 1/(z1 (z1 + z2)) if z1 + z2 + z3 = 0, z1 != 0,
///                    z1 + z2 != 0, else 0
GaussRat carr_closed_form_c1(const GaussRat& z1);
GaussRat carr_closed_form_c2(const GaussRat& z1, const GaussRat& z2);
GaussRat carr_closed_form_c3(const GaussRat& z1, const GaussRat& z2, const GaussRat& z3);

/// Memoizing evaluator. Values are immutable once cached; concurrent
/// duplicate derivations are benign (the derivation is deterministic).
class MouldTable {
public:
    /// Total function: empty key -> 0, nonresonant -> 0, an interior zero
    /// weight at length >= 2 -> 0; closed forms through length 3; the
    /// variance recursion resolved for the leading entry beyond.
    GaussRat value(const WeightKey& key) const;
    GaussRat value(const Word& w) const { return value(key_of(w)); }

    std::size_t cache_size() const;

private:
    mutable std::map<WeightKey, GaussRat> cache_;
    mutable std::mutex mu_;

    GaussRat eval(const WeightKey& key) const;
};

/// Shared process-wide table.
GaussRat carr_value(const WeightKey& key);
GaussRat carr_value(const Word& w);

using Mould = std::function<GaussRat(const WeightKey&)>;

/// Unit mould for composition: 1 on single letters, 0 elsewhere.
GaussRat unit_mould(const WeightKey& key);

/// Prenormal-form mould, implemented for lengths <= 3 only (it agrees with
/// the Carr closed forms there); throws std::invalid_argument beyond.
GaussRat tram_value(const WeightKey& key);

/// (M o N)^w = sum over decompositions of w into k >= 1 nonempty blocks of
/// M^{|w1|...|wk|} * N^{w1} * ... * N^{wk}, block letters added by weight.
GaussRat mould_compose(const Mould& m, const Mould& n, const WeightKey& w);

/// All interleavings of u and v preserving the order of each (with
/// multiplicity); C(|u|+|v|, |u|) entries.
std::vector<WeightKey> shuffle_keys(const WeightKey& u, const WeightKey& v);

/// Sum of the mould over all shuffles of u and v; zero indicates
/// alternality for this pair. u and v must be nonempty.
GaussRat alternality_defect(const Mould& m, const WeightKey& u, const WeightKey& v);
GaussRat alternality_defect(const Mould& m, const Word& u, const Word& v);

}  // namespace isochron
