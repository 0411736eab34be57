/**
 * @file variety.hpp
 * @brief Polynomial generators of the isochronous-center affine variety
 *        over the canonical independent Hamiltonian coordinates, with the
 *        weight-grading check and deterministic text / structured export.
 */
#pragma once

#include "isochron/correction.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace isochron {

struct GeneratorSet {
    int degree = 0;
    int max_depth = 0;
    std::vector<CoeffVar> coordinates;                  // ordered independent variables
    std::vector<std::pair<int, SymPoly>> generators;    // (depth, Ca_{2p}), ascending depth

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// Ca_{2p} for 2p = 2..maxDepth of the symbolic Hamiltonian field of
/// degree d, each reduced over the canonical coordinates.
GeneratorSet generators(int degree, int max_depth);

/// True iff every generator is concentrated in weight grade 0 (the torus
/// invariance of the variety).
bool grading_check(const GeneratorSet& gs);

/// One generator per line with a coordinate header; deterministic and
/// parsed back exactly by parse_text.
std::string export_text(const GeneratorSet& gs);
GeneratorSet parse_text(const std::string& text);

/// Machine-readable tree with exact rationals as integer [num, den] pairs.
nlohmann::json export_structured(const GeneratorSet& gs);
GeneratorSet from_structured(const nlohmann::json& doc);

/// Optional real-coordinate view: each generator split into real and
/// imaginary parts over re(p[a,b]) / im(p[a,b]). Derived output, not
/// round-tripped.
std::string export_real_split(const GeneratorSet& gs);

}  // namespace isochron
