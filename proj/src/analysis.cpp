#include "isochron/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isochron {

std::string Verdict::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Nonisochronous:
            os << "nonisochronous at depth " << depth << " (witness " << witness.str() << ")";
            break;
        case Kind::UndeterminedUpTo:
            os << "undetermined up to depth " << depth;
            break;
        case Kind::LinearizableTrivially:
            os << "linearizable (zero perturbation)";
            break;
    }
    return os.str();
}

Verdict check_isochronous(const FieldSpec& spec, int max_depth) {
    if (max_depth < 2) throw std::invalid_argument("check_isochronous: max_depth must be >= 2");
    if (!spec.is_numeric())
        throw std::invalid_argument("check_isochronous: spec must be numeric");
    validate_assignment(spec);
    Verdict v;
    if (spec.is_trivial()) {
        v.kind = Verdict::Kind::LinearizableTrivially;
        return v;
    }
    for (int depth = 2; depth <= max_depth; depth += 2) {
        GaussRat value = correction_value(spec, depth);
        v.evaluated.emplace_back(depth, value);
        if (!value.is_zero()) {
            v.kind = Verdict::Kind::Nonisochronous;
            v.depth = depth;
            v.witness = value;
            return v;
        }
    }
    v.kind = Verdict::Kind::UndeterminedUpTo;
    v.depth = max_depth;
    return v;
}

std::vector<long long> TheoremCondition::c_sequence(long long l, int m) {
    std::vector<long long> c;
    if (m <= 0) return c;
    c.push_back(4 * l);
    for (int i = 1; i < m; ++i) c.push_back(4 * (c.back() - 1));
    return c;
}

namespace {

// Degrees of the components that are actually nonzero. Symbolic components
// count as potentially nonzero.
std::set<int> support(const FieldSpec& spec) {
    std::set<int> out;
    for (const auto& [r, comp] : spec.components) {
        if (comp.symbolic) {
            out.insert(r);
            continue;
        }
        for (const auto& [v, z] : comp.values) {
            if (!z.is_zero()) {
                out.insert(r);
                break;
            }
        }
    }
    return out;
}

// Central coefficient p[i,i] of component 2i+1; zero when absent. Returns
// nullopt when the component is symbolic (value unknown).
std::optional<GaussRat> central_value(const FieldSpec& spec, int i) {
    auto it = spec.components.find(2 * i + 1);
    if (it == spec.components.end()) return GaussRat(0);
    if (it->second.symbolic) return std::nullopt;
    auto vt = it->second.values.find(CoeffVar::p(i, i));
    return vt == it->second.values.end() ? GaussRat(0) : vt->second;
}

TheoremCheck no(const std::string& why) { return {false, "no guarantee: " + why}; }

bool in_ranges(int deg, const std::vector<std::pair<long long, long long>>& ranges) {
    for (auto [lo, hi] : ranges)
        if (deg >= lo && deg <= hi) return true;
    return false;
}

}  // namespace

TheoremCheck theorem_applies(const FieldSpec& spec, const TheoremCondition& cond) {
    using Id = TheoremCondition::Id;
    if (!spec.hamiltonian) return no("spec is not Hamiltonian");
    std::set<int> sup = support(spec);
    if (sup.empty()) return no("trivial perturbation");
    const int degree = *sup.rbegin();
    std::ostringstream ex;

    auto centrals_vanish = [&](int upto, std::string& why) {
        for (int i = 1; i <= upto; ++i) {
            auto c = central_value(spec, i);
            if (!c) {
                why = "cannot verify p[" + std::to_string(i) + "," + std::to_string(i) +
                      "] = 0 on a symbolic component";
                return false;
            }
            if (!c->is_zero()) {
                why = "p[" + std::to_string(i) + "," + std::to_string(i) + "] is nonzero";
                return false;
            }
        }
        return true;
    };

    switch (cond.id) {
        case Id::T1a: {
            if (degree % 2 != 0) return no("degree is odd");
            const int n = degree / 2;
            for (int r = (cond.r > 0 ? cond.r : 1); r <= (cond.r > 0 ? cond.r : n - 2); ++r) {
                if (!(r >= 1 && r < n - 1)) break;
                std::string why;
                if (!centrals_vanish(r - 1, why)) continue;
                auto c = central_value(spec, r);
                if (!c) return no("cannot verify Im(p[r,r]) on a symbolic component");
                if (c->im().sgn() > 0) {
                    ex << "even degree " << degree << ", p[i,i] = 0 for i < " << r
                       << " and Im(p[" << r << "," << r << "]) > 0";
                    return {true, ex.str()};
                }
            }
            return no("no pivot r < n-1 with vanishing lower centrals and Im(p[r,r]) > 0");
        }
        case Id::T1b: {
            if (degree % 2 != 0) return no("degree is odd");
            const int n = degree / 2;
            std::string why;
            if (!centrals_vanish(n - 1, why)) return no(why);
            ex << "even degree " << degree << " with p[i,i] = 0 for i = 1.." << n - 1;
            return {true, ex.str()};
        }
        case Id::T2: {
            if (cond.k < 2 || cond.l < 1 || cond.l > cond.k - 1)
                return no("parameters must satisfy k >= 2 and l <= k-1");
            for (int deg : sup)
                if (deg < cond.k || deg > 2 * cond.l)
                    return no("component degree " + std::to_string(deg) + " lies outside {k..2l}");
            ex << "support within {" << cond.k << ".." << 2 * cond.l << "} with k >= 2, l <= k-1";
            return {true, ex.str()};
        }
        case Id::T3: {
            if (cond.k < 2 || cond.l < 1 || cond.l > cond.k - 1)
                return no("parameters must satisfy k >= 2 and l <= k-1");
            auto c = TheoremCondition::c_sequence(cond.l, cond.m);
            for (size_t i = 1; i < c.size(); ++i)
                if (c[i] <= c[i - 1]) return no("band sequence is not strictly increasing");
            std::vector<std::pair<long long, long long>> ranges{{cond.k, 2 * cond.l}};
            for (long long cn : c) ranges.emplace_back(cn, 2 * (cn - 1));
            for (int deg : sup)
                if (!in_ranges(deg, ranges))
                    return no("component degree " + std::to_string(deg) +
                              " lies outside the admissible bands");
            ex << "support within {" << cond.k << ".." << 2 * cond.l << "}";
            for (long long cn : c) ex << " + {" << cn << ".." << 2 * (cn - 1) << "}";
            return {true, ex.str()};
        }
        case Id::T4i: {
            if (cond.k < 2 || cond.l < 1 || cond.l > cond.k - 1)
                return no("parameters must satisfy k >= 2 and l <= k-1");
            if (cond.r < 2 * cond.l + 2) return no("trailing block must start at r >= 2l+2");
            for (int deg : sup) {
                bool ok = (deg >= cond.k && deg <= 2 * cond.l + 1) || deg >= cond.r;
                if (!ok)
                    return no("component degree " + std::to_string(deg) +
                              " lies outside {k..2l+1} + {r..}");
            }
            auto c = central_value(spec, cond.l);
            if (!c) return no("cannot verify Im(p[l,l]) on a symbolic component");
            if (c->im().sgn() <= 0) return no("Im(p[l,l]) is not positive");
            ex << "support {" << cond.k << ".." << 2 * cond.l + 1 << "} + {" << cond.r
               << "..}, Im(p[" << cond.l << "," << cond.l << "]) > 0";
            return {true, ex.str()};
        }
        case Id::T4ii: {
            if (cond.k < 2 || cond.l < 1 || cond.l > cond.k - 1)
                return no("parameters must satisfy k >= 2 and l <= k-1");
            if (cond.r < 4 * cond.l) return no("trailing block must start at r >= 4l");
            for (int deg : sup) {
                bool ok = (deg >= cond.k && deg <= 2 * cond.l) || deg == 4 * cond.l - 1 ||
                          deg >= cond.r;
                if (!ok)
                    return no("component degree " + std::to_string(deg) +
                              " lies outside {k..2l} + {4l-1} + {r..}");
            }
            if (sup.count(2 * cond.l) == 0) return no("the degree-2l component is trivial");
            auto c = central_value(spec, 2 * cond.l - 1);
            if (!c) return no("cannot verify Im(p[2l-1,2l-1]) on a symbolic component");
            if (c->im().sgn() <= 0) return no("Im(p[2l-1,2l-1]) is not positive");
            ex << "support {" << cond.k << ".." << 2 * cond.l << "} + {" << 4 * cond.l - 1
               << "} + {" << cond.r << "..}, Im(p[" << 2 * cond.l - 1 << ","
               << 2 * cond.l - 1
               << "]) > 0 (reading the hypothesis display as a sum starting at the linear part)";
            return {true, ex.str()};
        }
        case Id::Weak: {
            for (int deg : sup)
                if (deg % 2 != 0)
                    return no("odd component degree " + std::to_string(deg) + " present");
            ex << "only even-degree components present (degree " << degree << ")";
            return {true, ex.str()};
        }
    }
    return no("unknown condition");
}

FieldSpec sample_hamiltonian_spec(const std::set<int>& components, std::mt19937_64& rng,
                                  const SampleOptions& opts) {
    std::uniform_int_distribution<int> num(1, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    auto draw = [&]() -> BigRat {
        int s = coin(rng) ? 1 : -1;
        return BigRat(s * num(rng), den(rng));
    };
    FieldSpec spec;
    spec.hamiltonian = true;
    for (int r : components) {
        ComponentAssignment comp;
        comp.symbolic = false;
        for (const auto& v : independent_set_component(r, true)) {
            if (opts.force_zero.count(v)) {
                comp.values.emplace(v, GaussRat(0));
                continue;
            }
            auto it = opts.force.find(v);
            if (it != opts.force.end()) {
                comp.values.emplace(v, it->second);
                continue;
            }
            if (is_central(v)) {
                comp.values.emplace(v, GaussRat::imag(draw()));
            } else {
                comp.values.emplace(v, GaussRat(draw(), draw()));
            }
        }
        spec.components.emplace(r, std::move(comp));
    }
    return validate_assignment(spec);
}

FieldSpec rescale(const FieldSpec& spec, const GaussRat& mu) {
    if (!mu.norm().is_one())
        throw std::invalid_argument("rescale: the action requires |mu| = 1");
    FieldSpec out = spec;
    for (auto& [r, comp] : out.components) {
        if (comp.symbolic) continue;
        for (auto& [v, z] : comp.values) z = pow(mu, v.weight()) * z;
    }
    return out;
}

std::string ProbeReport::str() const {
    std::ostringstream os;
    os << nonisochronous << "/" << samples << " samples nonisochronous";
    if (!exhausted_sample_ids.empty()) {
        os << "; exhausted max depth on samples:";
        for (int id : exhausted_sample_ids) os << " " << id;
    }
    return os.str();
}

ProbeReport consistency_probe(const TheoremCondition& cond, int samples, int max_depth,
                              unsigned long seed) {
    using Id = TheoremCondition::Id;
    std::mt19937_64 rng(seed);
    ProbeReport report;
    report.samples = samples;
    for (int s = 0; s < samples; ++s) {
        std::set<int> components;
        SampleOptions opts;
        switch (cond.id) {
            case Id::T1a: {
                const int r = std::max(1, cond.r);
                const int n = cond.n > 0 ? cond.n : r + 2;
                for (int d = 2; d <= 2 * n; ++d) components.insert(d);
                for (int i = 1; i < r; ++i) opts.force_zero.insert(CoeffVar::p(i, i));
                std::uniform_int_distribution<int> pos(1, 3);
                opts.force.emplace(CoeffVar::p(r, r), GaussRat::imag(BigRat(pos(rng), 1)));
                break;
            }
            case Id::T1b: {
                const int n = cond.n > 0 ? cond.n : 2;
                for (int d = 2; d <= 2 * n; ++d) components.insert(d);
                for (int i = 1; i <= n - 1; ++i) opts.force_zero.insert(CoeffVar::p(i, i));
                break;
            }
            case Id::T2: {
                for (int d = cond.k; d <= 2 * cond.l; ++d) components.insert(d);
                break;
            }
            case Id::T3: {
                for (int d = cond.k; d <= 2 * cond.l; ++d) components.insert(d);
                for (long long cn : TheoremCondition::c_sequence(cond.l, cond.m))
                    for (long long d = cn; d <= 2 * (cn - 1); ++d)
                        components.insert(static_cast<int>(d));
                break;
            }
            case Id::T4i: {
                for (int d = cond.k; d <= 2 * cond.l + 1; ++d) components.insert(d);
                components.insert(cond.r);
                std::uniform_int_distribution<int> pos(1, 3);
                opts.force.emplace(CoeffVar::p(cond.l, cond.l),
                                   GaussRat::imag(BigRat(pos(rng), 1)));
                break;
            }
            case Id::T4ii: {
                for (int d = cond.k; d <= 2 * cond.l; ++d) components.insert(d);
                components.insert(4 * cond.l - 1);
                components.insert(cond.r);
                std::uniform_int_distribution<int> pos(1, 3);
                opts.force.emplace(CoeffVar::p(2 * cond.l - 1, 2 * cond.l - 1),
                                   GaussRat::imag(BigRat(pos(rng), 1)));
                break;
            }
            case Id::Weak: {
                const int n = cond.n > 0 ? cond.n : 2;
                for (int d = 2; d <= 2 * n; d += 2) components.insert(d);
                break;
            }
        }
        FieldSpec spec = sample_hamiltonian_spec(components, rng, opts);
        Verdict v = check_isochronous(spec, max_depth);
        if (v.kind == Verdict::Kind::Nonisochronous) {
            ++report.nonisochronous;
            report.witness_depths.emplace_back(s, v.depth);
        } else {
            report.exhausted_sample_ids.push_back(s);
        }
    }
    return report;
}

}  // namespace isochron
