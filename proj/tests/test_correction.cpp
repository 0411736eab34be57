#include "isochron/correction.hpp"

#include "isochron/analysis.hpp"
#include "isochron/selftest.hpp"

#include <doctest.h>

#include <random>

using namespace isochron;

namespace {

FieldSpec symbolic_hamiltonian(std::set<int> degrees) {
    FieldSpec spec;
    spec.hamiltonian = true;
    for (int r : degrees) spec.components.emplace(r, ComponentAssignment{});
    return spec;
}

FieldSpec symbolic_hamiltonian(int degree) {
    std::set<int> degrees;
    for (int r = 2; r <= degree; ++r) degrees.insert(r);
    return symbolic_hamiltonian(std::move(degrees));
}

SymPoly component_part(const CorrectionTerm& ct, int len, std::vector<int> degs) {
    auto it = ct.component_parts.find({len, std::move(degs)});
    return it == ct.component_parts.end() ? SymPoly{} : it->second;
}

}  // namespace

TEST_CASE("quadratic depth-2 term") {
    FieldSpec quad = symbolic_hamiltonian(2);
    CorrectionTerm ct = correction_term(quad, 2);
    CHECK(ct.total == reduce(reference::quadratic_carr2(), quad));
    // Over the independent coordinates: i(3/2 |p[0,1]|^2 + 2/3 |p[-1,2]|^2).
    SymPoly expect =
        GaussRat::imag(BigRat(3, 2)) *
            (SymPoly::var(CoeffVar::p(0, 1)) * SymPoly::var(CoeffVar::pbar(0, 1))) +
        GaussRat::imag(BigRat(2, 3)) *
            (SymPoly::var(CoeffVar::p(-1, 2)) * SymPoly::var(CoeffVar::pbar(-1, 2)));
    CHECK(ct.total == expect);
    CHECK(ct.parts.size() == 1);
    CHECK(ct.parts.count(2) == 1);
}

TEST_CASE("cubic depth-2 term carries the central variable") {
    FieldSpec cubic = symbolic_hamiltonian(3);
    CorrectionTerm ct = correction_term(cubic, 2);
    CHECK(ct.total == reduce(reference::cubic_carr2(), cubic));
    // parts[1] is exactly the central coefficient.
    CHECK(ct.parts.at(1) == SymPoly::var(CoeffVar::p(1, 1)));
}

TEST_CASE("depth-4 component parts") {
    FieldSpec cubic = symbolic_hamiltonian(3);
    CorrectionTerm ct4 = correction_term(cubic, 4);
    CHECK(component_part(ct4, 2, {3, 3}) == reduce(reference::carr42_x3x3(), cubic));

    FieldSpec quartic = symbolic_hamiltonian(4);
    CorrectionTerm qt4 = correction_term(quartic, 4);
    SymPoly interior = reduce(reference::carr42_x4x2_interior(), quartic);
    SymPoly edge = reduce(reference::carr42_x4x2_edge(), quartic);
    SymPoly assembled = component_part(qt4, 2, {4, 2});
    // The interior 12 Re(...) block matches the print; the edge block enters
    // with the opposite sign (documented print divergence).
    CHECK(assembled == interior - edge);
    // The same part re-derived through the composition oracle.
    FieldSpec pair42 = symbolic_hamiltonian({2, 4});
    CorrectionTerm pair_ct = correction_term(pair42, 4);
    CHECK(component_part(pair_ct, 2, {4, 2}) == assembled);
}

TEST_CASE("projection factor is pinned by the composition oracle") {
    FieldSpec quad = symbolic_hamiltonian(2);
    SymPoly oracle = correction_oracle(quad, 4);
    CorrectionTerm ct = correction_term(quad, 4);
    CHECK(ct.total == oracle);
    // Depth 4 over the quadratic field lives entirely in length 4; the
    // factorial alternative 1/4! disagrees with the oracle by a factor 6.
    SymPoly raw = ct.parts.at(4);
    SymPoly with_len = GaussRat(BigRat(1, 4)) * raw;
    SymPoly with_factorial = GaussRat(BigRat(1, 24)) * raw;
    CHECK(with_len == oracle);
    CHECK_FALSE(with_factorial == oracle);
}

TEST_CASE("oracle equivalence, symbolic") {
    for (int degree = 2; degree <= 4; ++degree) {
        FieldSpec spec = symbolic_hamiltonian(degree);
        for (int depth = 2; depth <= 4; depth += 2) {
            CAPTURE(degree);
            CAPTURE(depth);
            CHECK(correction_term(spec, depth).total == correction_oracle(spec, depth));
        }
    }
}

TEST_CASE("oracle equivalence, numeric two-path") {
    std::mt19937_64 rng(37);
    for (int s = 0; s < 10; ++s) {
        std::set<int> degrees{2, 3};
        FieldSpec numeric = sample_hamiltonian_spec(degrees, rng);
        for (int depth = 2; depth <= 4; depth += 2) {
            GaussRat bracket_route = correction_value(numeric, depth);
            GaussRat oracle_route = correction_oracle(numeric, depth).constant_value();
            CHECK(bracket_route == oracle_route);
            // Substituting the numeric values into the symbolic result
            // agrees with the direct numeric assembly.
            FieldSpec symbolic = symbolic_hamiltonian(degrees);
            auto full = full_numeric_assignment(numeric);
            CHECK(correction_term(symbolic, depth).total.evaluate(full) == bracket_route);
        }
    }
}

TEST_CASE("pinned numeric value") {
    // p[0,1] = 2, p[-1,2] = 1+i gives p[1,0] = -1 and
    // Ca_2 = i(6 |p[1,0]|^2 + 2/3 |p[-1,2]|^2) = i(6 + 4/3) = 22/3 i.
    FieldSpec spec;
    spec.hamiltonian = true;
    ComponentAssignment comp;
    comp.symbolic = false;
    comp.values.emplace(CoeffVar::p(0, 1), GaussRat(2));
    comp.values.emplace(CoeffVar::p(-1, 2), GaussRat(BigRat(1), BigRat(1)));
    spec.components.emplace(2, comp);
    CHECK(correction_value(spec, 2) == GaussRat::imag(BigRat(22, 3)));
    CHECK(correction_oracle(spec, 2).constant_value() == GaussRat::imag(BigRat(22, 3)));
}

TEST_CASE("zero perturbation") {
    FieldSpec zero;
    zero.hamiltonian = true;
    ComponentAssignment comp;
    comp.symbolic = false;
    zero.components.emplace(2, comp);
    CHECK(correction_value(zero, 2) == GaussRat(0));
    CHECK(correction_value(zero, 4) == GaussRat(0));
}

TEST_CASE("odd depths vanish") {
    CHECK(odd_depth_term(symbolic_hamiltonian(3), 3).is_zero());
    CHECK(odd_depth_term(symbolic_hamiltonian(5), 5).is_zero());
    CHECK(odd_depth_term(symbolic_hamiltonian(2), 1).is_zero());
    std::mt19937_64 rng(43);
    for (int s = 0; s < 5; ++s) {
        FieldSpec spec = sample_hamiltonian_spec({2, 3, 4}, rng);
        CHECK(odd_depth_term(spec, 3).is_zero());
        CHECK(odd_depth_term(spec, 5).is_zero());
    }
}

TEST_CASE("fundamental lemma closed form") {
    // r = 2 with components {2,3}: central term present.
    FieldSpec s23 = symbolic_hamiltonian({2, 3});
    CHECK(fundamental_lemma_value(2, s23) == correction_term(s23, 2).total);
    // r = 2 with component {2} only: central term absent.
    FieldSpec s2 = symbolic_hamiltonian(std::set<int>{2});
    CHECK(fundamental_lemma_value(2, s2) == correction_term(s2, 2).total);
    // r = 3 over {3,4,5} at depth 4, r = 4 over {4..7} at depth 6.
    FieldSpec s345 = symbolic_hamiltonian({3, 4, 5});
    CHECK(fundamental_lemma_value(3, s345) == correction_term(s345, 4).total);
    FieldSpec s4567 = symbolic_hamiltonian({4, 5, 6, 7});
    CHECK(fundamental_lemma_value(4, s4567) == correction_term(s4567, 6).total);

    CHECK_THROWS_AS(fundamental_lemma_value(1, s2), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_lemma_value(3, symbolic_hamiltonian({2, 3})),
                    std::invalid_argument);
}

TEST_CASE("structure of the correction term") {
    FieldSpec quartic = symbolic_hamiltonian(4);
    CorrectionTerm ct = correction_term(quartic, 4);
    // No parts beyond length = depth; the deepest part involves only
    // degree-2 variables.
    for (const auto& [len, part] : ct.parts) CHECK(len <= 4);
    for (const auto& t : ct.parts.at(4).terms()) {
        for (const auto& v : t.vars) CHECK(v.component() == 2);
    }
    // The y d/dy side is the conjugate of the x d/dx side, compared after
    // normalization (the conjugate of the central variable rewrites).
    CHECK(ct.total_q == reduce(ct.total.conj(), quartic));
    FieldSpec cubic = symbolic_hamiltonian(3);
    CorrectionTerm c2 = correction_term(cubic, 2);
    CHECK(c2.total_q == reduce(c2.total.conj(), cubic));
}

TEST_CASE("pruning zero-weight letters does not change the assembly") {
    // Words of length >= 2 with a zero-weight letter carry mould value 0,
    // so assembling over the unpruned enumeration gives the same result.
    FieldSpec cubic = symbolic_hamiltonian(3);
    OperatorSet ops = operators_for(cubic);
    for (int depth : {2, 4}) {
        EnumerateOptions keep;
        keep.prune_zero_weight_letters = false;
        SymPoly manual;
        for (const Word& w : enumerate_resonant_words({2, 3}, depth, keep)) {
            GaussRat val = carr_value(w);
            if (val.is_zero()) continue;
            BracketCoeffs bc = bracket_coeffs(w, ops);
            manual += (val * GaussRat(length_factor(static_cast<int>(w.size())))) * bc.p;
        }
        CHECK(reduce(manual, cubic) == correction_term(cubic, depth).total);
    }
}

TEST_CASE("correction values of real Hamiltonian fields are purely imaginary") {
    // Even-length parts are Hermitian forms times i and odd-length parts
    // pair each monomial against its conjugate with opposite real
    // coefficients, so every evaluated part (and the total) has zero real
    // part; central coefficients are purely imaginary to begin with.
    std::mt19937_64 rng(73);
    for (int s = 0; s < 10; ++s) {
        FieldSpec spec = sample_hamiltonian_spec({2, 3, 4}, rng);
        for (int depth = 2; depth <= 6; depth += 2) {
            CorrectionTerm ct = correction_term(spec, depth);
            CHECK(ct.total.constant_value().re().is_zero());
            for (const auto& [len, part] : ct.parts) {
                CHECK(part.constant_value().re().is_zero());
            }
        }
    }
}

TEST_CASE("normalized parts sum to the total") {
    FieldSpec cubic = symbolic_hamiltonian(3);
    CorrectionTerm ct = correction_term(cubic, 4);
    SymPoly sum;
    for (const auto& [len, part] : ct.parts) sum += ct.normalized_part(len);
    CHECK(sum == ct.total);
    // The component breakdown refines the normalized parts.
    SymPoly csum;
    for (const auto& [key, part] : ct.component_parts) csum += part;
    CHECK(csum == ct.total);
}
