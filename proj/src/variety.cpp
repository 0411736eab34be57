#include "isochron/variety.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace isochron {

GeneratorSet generators(int degree, int max_depth) {
    if (degree < 2) throw std::invalid_argument("generators: degree must be >= 2");
    if (max_depth < 0 || max_depth % 2 != 0)
        throw std::invalid_argument("generators: max_depth must be even and >= 0");
    FieldSpec spec;
    spec.hamiltonian = true;
    for (int r = 2; r <= degree; ++r) spec.components.emplace(r, ComponentAssignment{});
    GeneratorSet gs;
    gs.degree = degree;
    gs.max_depth = max_depth;
    gs.coordinates = independent_set(degree, true);
    for (int depth = 2; depth <= max_depth; depth += 2) {
        gs.generators.emplace_back(depth, correction_term(spec, depth).total);
    }
    return gs;
}

bool grading_check(const GeneratorSet& gs) {
    for (const auto& [depth, g] : gs.generators) {
        auto grades = g.weight_grade();
        for (const auto& [w, part] : grades) {
            if (w != 0 && !part.is_zero()) return false;
        }
    }
    return true;
}

std::string export_text(const GeneratorSet& gs) {
    std::ostringstream os;
    os << "degree: " << gs.degree << "\n";
    os << "max-depth: " << gs.max_depth << "\n";
    os << "coordinates:";
    for (const auto& v : gs.coordinates) os << " " << v.str();
    os << "\n";
    for (const auto& [depth, g] : gs.generators) {
        os << "generator " << depth << ": " << g.str() << "\n";
    }
    return os.str();
}

GeneratorSet parse_text(const std::string& text) {
    GeneratorSet gs;
    std::istringstream is(text);
    std::string line;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("generator set: " + why + " in line '" + line + "'");
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("degree: ", 0) == 0) {
            gs.degree = std::stoi(line.substr(8));
        } else if (line.rfind("max-depth: ", 0) == 0) {
            gs.max_depth = std::stoi(line.substr(11));
        } else if (line.rfind("coordinates:", 0) == 0) {
            std::istringstream ls(line.substr(12));
            std::string tok;
            while (ls >> tok) {
                SymPoly v = SymPoly::parse(tok);
                if (v.terms().size() != 1 || v.terms()[0].vars.size() != 1) fail("bad coordinate");
                gs.coordinates.push_back(v.terms()[0].vars[0]);
            }
        } else if (line.rfind("generator ", 0) == 0) {
            size_t colon = line.find(": ");
            if (colon == std::string::npos) fail("missing ':'");
            int depth = std::stoi(line.substr(10, colon - 10));
            gs.generators.emplace_back(depth, SymPoly::parse(line.substr(colon + 2)));
        } else if (line.rfind("real ", 0) != 0 && line.rfind("#", 0) != 0) {
            fail("unknown line");
        }
    }
    return gs;
}

namespace {

nlohmann::json rat_json(const BigRat& q) {
    return nlohmann::json::array({q.num().str(), q.den().str()});
}

BigRat rat_from_json(const nlohmann::json& j) {
    return BigRat(BigInt(j.at(0).get<std::string>()), BigInt(j.at(1).get<std::string>()));
}

nlohmann::json var_json(const CoeffVar& v) {
    nlohmann::json j;
    j["a"] = v.a;
    j["b"] = v.b;
    j["conj"] = v.conjugated;
    return j;
}

CoeffVar var_from_json(const nlohmann::json& j) {
    CoeffVar v;
    v.a = j.at("a").get<int>();
    v.b = j.at("b").get<int>();
    v.conjugated = j.at("conj").get<bool>();
    return v;
}

}  // namespace

nlohmann::json export_structured(const GeneratorSet& gs) {
    nlohmann::json doc;
    doc["degree"] = gs.degree;
    doc["max_depth"] = gs.max_depth;
    doc["coordinates"] = nlohmann::json::array();
    for (const auto& v : gs.coordinates) doc["coordinates"].push_back(var_json(v));
    doc["generators"] = nlohmann::json::array();
    for (const auto& [depth, g] : gs.generators) {
        nlohmann::json jg;
        jg["depth"] = depth;
        jg["terms"] = nlohmann::json::array();
        for (const auto& t : g.terms()) {
            nlohmann::json jt;
            jt["re"] = rat_json(t.coeff.re());
            jt["im"] = rat_json(t.coeff.im());
            jt["vars"] = nlohmann::json::array();
            size_t i = 0;
            while (i < t.vars.size()) {
                size_t j = i;
                while (j < t.vars.size() && t.vars[j] == t.vars[i]) ++j;
                nlohmann::json jv = var_json(t.vars[i]);
                jv["pow"] = j - i;
                jt["vars"].push_back(jv);
                i = j;
            }
            jg["terms"].push_back(jt);
        }
        doc["generators"].push_back(jg);
    }
    return doc;
}

GeneratorSet from_structured(const nlohmann::json& doc) {
    GeneratorSet gs;
    gs.degree = doc.at("degree").get<int>();
    gs.max_depth = doc.at("max_depth").get<int>();
    for (const auto& jv : doc.at("coordinates")) gs.coordinates.push_back(var_from_json(jv));
    for (const auto& jg : doc.at("generators")) {
        std::vector<Monomial> terms;
        for (const auto& jt : jg.at("terms")) {
            Monomial m;
            m.coeff = GaussRat(rat_from_json(jt.at("re")), rat_from_json(jt.at("im")));
            for (const auto& jv : jt.at("vars")) {
                CoeffVar v = var_from_json(jv);
                int p = jv.at("pow").get<int>();
                for (int x = 0; x < p; ++x) m.vars.push_back(v);
            }
            terms.push_back(std::move(m));
        }
        gs.generators.emplace_back(jg.at("depth").get<int>(), SymPoly::from_terms(std::move(terms)));
    }
    return gs;
}

namespace {

// Real-coordinate expansion: substitute p = re + i*im, ~p = re - i*im and
// collect monomials over the doubled variable set.
struct RealVar {
    int a, b;
    bool im;
    friend auto operator<=>(const RealVar&, const RealVar&) = default;
};
using RealMono = std::map<RealVar, int>;  // variable -> power
using RealExpansion = std::map<RealMono, GaussRat>;

RealExpansion real_mul(const RealExpansion& x, const RealExpansion& y) {
    RealExpansion out;
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) {
            RealMono m = mx;
            for (const auto& [v, p] : my) m[v] += p;
            auto [it, inserted] = out.emplace(m, cx * cy);
            if (!inserted) it->second += cx * cy;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

std::string real_poly_str(const RealExpansion& e, bool imaginary_part) {
    std::vector<std::string> parts;
    for (const auto& [m, c] : e) {
        BigRat coeff = imaginary_part ? c.im() : c.re();
        if (coeff.is_zero()) continue;
        std::string s = "(" + coeff.str() + ")";
        for (const auto& [v, p] : m) {
            s += std::string("*") + (v.im ? "im" : "re") + "(p[" + std::to_string(v.a) + "," +
                 std::to_string(v.b) + "])";
            if (p > 1) s += "^" + std::to_string(p);
        }
        parts.push_back(std::move(s));
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

}  // namespace

std::string export_real_split(const GeneratorSet& gs) {
    std::ostringstream os;
    for (const auto& [depth, g] : gs.generators) {
        RealExpansion total;
        for (const auto& t : g.terms()) {
            RealExpansion term{{RealMono{}, t.coeff}};
            for (const auto& v : t.vars) {
                RealVar re{v.a, v.b, false};
                RealVar im{v.a, v.b, true};
                GaussRat im_coeff = v.conjugated ? -GaussRat::i() : GaussRat::i();
                RealExpansion factor{{RealMono{{re, 1}}, GaussRat(1)},
                                     {RealMono{{im, 1}}, im_coeff}};
                term = real_mul(term, factor);
            }
            for (const auto& [m, c] : term) {
                auto [it, inserted] = total.emplace(m, c);
                if (!inserted) it->second += c;
            }
        }
        os << "real generator " << depth << " re: " << real_poly_str(total, false) << "\n";
        os << "real generator " << depth << " im: " << real_poly_str(total, true) << "\n";
    }
    return os.str();
}

}  // namespace isochron
