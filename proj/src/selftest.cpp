#include "isochron/selftest.hpp"

#include "isochron/correction.hpp"
#include "isochron/golden_tables.hpp"
#include "isochron/mould.hpp"

#include <ostream>
#include <random>
#include <sstream>

namespace isochron {

namespace reference {

namespace {

SymPoly pv(int a, int b) { return SymPoly::var(CoeffVar::p(a, b)); }
SymPoly pb(int a, int b) { return SymPoly::var(CoeffVar::pbar(a, b)); }
SymPoly abs2(int a, int b) { return pv(a, b) * pb(a, b); }

// c Re(P) = (c/2)(P + conj P), c Im(P) = (c/2i)(P - conj P) for rational c.
SymPoly re_times(const BigRat& c, const SymPoly& p) {
    return GaussRat(c / BigRat(2)) * (p + p.conj());
}
SymPoly im_times(const BigRat& c, const SymPoly& p) {
    return (GaussRat(c / BigRat(2)) * GaussRat::i().inv()) * (p - p.conj());
}

}  // namespace

SymPoly quadratic_carr2() {
    return GaussRat::imag(BigRat(6)) * abs2(1, 0) + GaussRat::imag(BigRat(2, 3)) * abs2(-1, 2);
}

SymPoly cubic_carr2() { return pv(1, 1) + quadratic_carr2(); }

SymPoly carr42_x3x3() {
    return GaussRat::imag(BigRat(12)) * abs2(2, 0) + GaussRat::imag(BigRat(3, 4)) * abs2(-1, 3);
}

SymPoly carr42_x4x2_interior() {
    return GaussRat::i() * re_times(BigRat(12), pv(2, 1) * pb(1, 0));
}

SymPoly carr42_x4x2_edge() {
    return GaussRat::i() * re_times(BigRat(8), pv(3, 0) * pv(-1, 2));
}

SymPoly carr43_print() {
    SymPoly sum = im_times(BigRat(120), pv(2, 0) * pb(1, 0) * pb(1, 0)) +
                  im_times(BigRat(26, 3), pb(-1, 3) * pv(-1, 2) * pb(1, 0)) +
                  im_times(BigRat(40), pv(2, 0) * pv(-1, 2) * pv(1, 0));
    return (-GaussRat::i()) * sum;
}

SymPoly carr44_print() {
    SymPoly sum = GaussRat(BigRat(-144)) * (abs2(1, 0) * abs2(1, 0)) +
                  GaussRat(BigRat(12)) * (abs2(1, 0) * abs2(-1, 2)) +
                  GaussRat(BigRat(-8, 9)) * (abs2(-1, 2) * abs2(-1, 2)) +
                  re_times(BigRat(40), pv(-1, 2) * pv(0, 1) * pv(0, 1) * pv(0, 1));
    return GaussRat::i() * sum;
}

}  // namespace reference

namespace {

FieldSpec symbolic_hamiltonian(int degree) {
    FieldSpec spec;
    spec.hamiltonian = true;
    for (int r = 2; r <= degree; ++r) spec.components.emplace(r, ComponentAssignment{});
    return spec;
}

struct SelfTest {
    std::ostream& out;
    bool failed = false;

    void require(bool ok, const std::string& name, const std::string& diff = "") {
        out << name << ": " << (ok ? "ok" : "FAIL") << "\n";
        if (!ok) {
            failed = true;
            if (!diff.empty()) out << "  diff: " << diff << "\n";
        }
    }

    // Print-formula comparison: divergence is reported, not failed.
    void diagnose(const std::string& name, const SymPoly& assembled, const SymPoly& printed) {
        if (assembled == printed) {
            out << name << ": matches the printed formula\n";
        } else {
            out << name << ": diverges from the printed formula (documented diagnostic)\n";
            out << "  assembled: " << assembled.str() << "\n";
            out << "  printed:   " << printed.str() << "\n";
        }
    }
};

}  // namespace

int run_selftest(std::ostream& out) {
    SelfTest t{out};

    int ok2 = 0;
    for (const auto& e : golden::kLength2Table) {
        if (carr_value(parse_word(e.word)) == GaussRat::parse(e.value)) ++ok2;
    }
    out << "mould length-2 table: " << ok2 << "/4 entries\n";
    if (ok2 != 4) t.failed = true;

    int ok4 = 0;
    std::ostringstream diffs;
    for (const auto& e : golden::kLength4Table) {
        GaussRat got = carr_value(parse_word(e.word));
        GaussRat want = GaussRat::parse(e.value);
        if (got == want) {
            ++ok4;
        } else {
            diffs << "  " << e.word << ": got " << got.str() << ", want " << e.value << "\n";
        }
    }
    out << "mould length-4 table: " << ok4 << "/44 length-4 entries\n";
    if (ok4 != 44) {
        t.failed = true;
        out << diffs.str();
    }

    // Closed forms against the recursion path on random short keys.
    {
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<int> w(-6, 6);
        std::uniform_int_distribution<int> len(1, 3);
        bool ok = true;
        for (int s = 0; s < 1000 && ok; ++s) {
            WeightKey key;
            int n = len(rng);
            for (int i = 0; i < n; ++i) key.push_back(w(rng));
            auto z = [](int v) { return GaussRat::imag(BigRat(v)); };
            GaussRat direct = carr_value(key);
            GaussRat closed = n == 1   ? carr_closed_form_c1(z(key[0]))
                              : n == 2 ? carr_closed_form_c2(z(key[0]), z(key[1]))
                                       : carr_closed_form_c3(z(key[0]), z(key[1]), z(key[2]));
            ok = (direct == closed);
        }
        t.require(ok, "closed-form consistency (1000 random keys)");
    }

    // Worked correction formulas.
    FieldSpec quad = symbolic_hamiltonian(2);
    FieldSpec cubic = symbolic_hamiltonian(3);
    FieldSpec quartic = symbolic_hamiltonian(4);

    CorrectionTerm quad2 = correction_term(quad, 2);
    t.require(quad2.total == reduce(reference::quadratic_carr2(), quad), "quadratic depth-2 total",
              quad2.total.str());

    CorrectionTerm cubic2 = correction_term(cubic, 2);
    t.require(cubic2.total == reduce(reference::cubic_carr2(), cubic), "cubic depth-2 total",
              cubic2.total.str());

    CorrectionTerm cubic4 = correction_term(cubic, 4);
    auto part = [&](const CorrectionTerm& ct, int len, std::vector<int> degs) {
        auto it = ct.component_parts.find({len, degs});
        return it == ct.component_parts.end() ? SymPoly{} : it->second;
    };
    t.require(part(cubic4, 2, {3, 3}) == reduce(reference::carr42_x3x3(), cubic),
              "depth-4 length-2 part (degrees 3,3)", part(cubic4, 2, {3, 3}).str());

    CorrectionTerm quartic4 = correction_term(quartic, 4);
    {
        SymPoly assembled = part(quartic4, 2, {4, 2});
        SymPoly interior = reduce(reference::carr42_x4x2_interior(), quartic);
        SymPoly edge = reduce(reference::carr42_x4x2_edge(), quartic);
        if (assembled == interior + edge) {
            out << "depth-4 length-2 part (degrees 4,2): matches the printed formula\n";
        } else if (assembled == interior - edge) {
            out << "depth-4 length-2 part (degrees 4,2): ok; the printed edge block "
                   "8 Re(p[3,0]p[-1,2]) enters with the opposite sign (documented diagnostic)\n";
        } else {
            t.require(false, "depth-4 length-2 part (degrees 4,2)", assembled.str());
        }
    }
    t.diagnose("depth-4 length-3 part", part(cubic4, 3, {3, 2, 2}),
               reduce(reference::carr43_print(), cubic));
    t.diagnose("depth-4 length-4 part", part(cubic4, 4, {2, 2, 2, 2}),
               reduce(reference::carr44_print(), cubic));

    // Odd depths vanish identically.
    {
        bool ok = odd_depth_term(cubic, 3).is_zero() && odd_depth_term(cubic, 5).is_zero() &&
                  odd_depth_term(symbolic_hamiltonian(5), 5).is_zero();
        t.require(ok, "odd-depth vanishing (depths 3 and 5)");
    }

    // Two-route agreement, the binding check.
    {
        bool ok = true;
        for (int degree = 2; degree <= 4 && ok; ++degree) {
            FieldSpec spec = symbolic_hamiltonian(degree);
            for (int depth = 2; depth <= 4 && ok; depth += 2) {
                ok = (correction_term(spec, depth).total == correction_oracle(spec, depth));
            }
        }
        t.require(ok, "bracket/composition route agreement (degrees 2-4, depths 2-4)");
    }

    out << (t.failed ? "selftest: FAIL\n" : "selftest: PASS\n");
    return t.failed ? 1 : 0;
}

}  // namespace isochron
