#include "isochron/fieldfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace isochron {

namespace {

std::string strip(std::string s) {
    size_t hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

FieldSpec parse_field(std::string_view text) {
    FieldSpec spec;
    std::istringstream is{std::string(text)};
    std::string raw;
    int lineno = 0;
    int current_component = 0;
    bool saw_component = false;

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty()) continue;
        auto fail = [&](int col, const std::string& msg) -> void {
            throw FieldParseError(lineno, col, msg);
        };

        if (line.rfind("hamiltonian:", 0) == 0) {
            if (saw_component) fail(1, "the hamiltonian flag must precede component blocks");
            std::string value = strip(line.substr(12));
            if (value == "true") {
                spec.hamiltonian = true;
            } else if (value == "false") {
                spec.hamiltonian = false;
            } else {
                fail(13, "expected 'true' or 'false', got '" + value + "'");
            }
            continue;
        }

        if (line.rfind("component", 0) == 0) {
            std::istringstream ls(line.substr(9));
            int r = 0;
            if (!(ls >> r) || r < 2) fail(11, "expected a component degree >= 2");
            std::string tail;
            ls >> tail;
            std::string extra;
            if (ls >> extra) fail(1, "trailing tokens after component declaration");
            if (spec.components.count(r)) fail(1, "duplicate component " + std::to_string(r));
            ComponentAssignment comp;
            if (tail == "symbolic") {
                comp.symbolic = true;
            } else if (tail == ":" || tail.empty()) {
                comp.symbolic = false;
            } else {
                fail(11, "expected 'symbolic' or ':' after the degree");
            }
            spec.components.emplace(r, std::move(comp));
            current_component = r;
            saw_component = true;
            continue;
        }

        if (line.rfind("p[", 0) == 0 || line.rfind("q[", 0) == 0 || line.rfind("~", 0) == 0) {
            if (!saw_component) fail(1, "coefficient assignment before any component");
            size_t eq = line.find('=');
            if (eq == std::string::npos) fail(1, "expected '=' in coefficient assignment");
            std::string lhs = strip(line.substr(0, eq));
            std::string rhs = strip(line.substr(eq + 1));
            SymPoly parsed;
            try {
                parsed = SymPoly::parse(lhs);
            } catch (const std::invalid_argument& e) {
                fail(1, std::string("bad coefficient name: ") + e.what());
            }
            if (parsed.terms().size() != 1 || parsed.terms()[0].vars.size() != 1 ||
                !parsed.terms()[0].coeff.is_one())
                fail(1, "left-hand side must be a single coefficient");
            CoeffVar var = parsed.terms()[0].vars[0];
            GaussRat value;
            try {
                value = GaussRat::parse(rhs);
            } catch (const std::invalid_argument& e) {
                fail(static_cast<int>(eq) + 2, e.what());
            }
            auto& comp = spec.components.at(current_component);
            if (comp.symbolic)
                fail(1, "cannot assign coefficients of a symbolic component");
            if (var.component() != current_component)
                fail(1, var.str() + " does not belong to component " +
                            std::to_string(current_component));
            if (comp.values.count(var)) fail(1, "duplicate assignment to " + var.str());
            if (var.qside || var.conjugated)
                throw FieldParseError(lineno, 1, var.str() +
                                                     " is dependent (derived by the reality "
                                                     "relations) and cannot be assigned");
            if (!is_independent(var, spec.hamiltonian))
                throw FieldParseError(lineno, 1,
                                      var.str() + " is dependent under the Hamiltonian "
                                                  "relations and cannot be assigned");
            if (spec.hamiltonian && is_central(var) && !value.re().is_zero())
                throw FieldParseError(lineno, 1, "central coefficient " + var.str() +
                                                     " must be purely imaginary");
            comp.values.emplace(var, value);
            continue;
        }

        fail(1, "unknown declaration '" + line + "'");
    }

    validate_assignment(spec);
    return spec;
}

std::string render_field(const FieldSpec& spec) {
    std::ostringstream os;
    os << "hamiltonian: " << (spec.hamiltonian ? "true" : "false") << "\n";
    for (const auto& [r, comp] : spec.components) {
        if (comp.symbolic) {
            os << "component " << r << " symbolic\n";
            continue;
        }
        os << "component " << r << ":\n";
        for (const auto& [v, z] : comp.values) {
            os << v.str() << " = " << z.str() << "\n";
        }
    }
    return os.str();
}

FieldSpec load_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open field file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_field(buffer.str());
}

}  // namespace isochron
