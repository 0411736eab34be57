#include "isochron/sympoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace isochron {

std::string CoeffVar::str() const {
    std::string s;
    if (conjugated) s += "~";
    s += qside ? "q" : "p";
    s += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    return s;
}

int Monomial::weight() const {
    int w = 0;
    for (const auto& v : vars) w += v.weight();
    return w;
}

bool operator==(const Monomial& a, const Monomial& b) {
    return a.vars == b.vars && a.coeff == b.coeff;
}

namespace {

// Term order: degree first, then lexicographic on the sorted variable list.
bool mono_vars_less(const std::vector<CoeffVar>& a, const std::vector<CoeffVar>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

SymPoly SymPoly::constant(GaussRat c) {
    SymPoly p;
    if (!c.is_zero()) p.terms_.push_back(Monomial{{}, std::move(c)});
    return p;
}

SymPoly SymPoly::var(const CoeffVar& v) {
    SymPoly p;
    p.terms_.push_back(Monomial{{v}, GaussRat(1)});
    return p;
}

SymPoly SymPoly::from_terms(std::vector<Monomial> terms) {
    SymPoly p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void SymPoly::canonicalize() {
    for (auto& t : terms_) std::sort(t.vars.begin(), t.vars.end());
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& x, const Monomial& y) { return mono_vars_less(x.vars, y.vars); });
    std::vector<Monomial> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().vars == t.vars) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else if (!t.coeff.is_zero()) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

bool SymPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].vars.empty());
}

GaussRat SymPoly::constant_value() const {
    if (terms_.empty()) return GaussRat(0);
    if (!is_constant()) throw std::logic_error("SymPoly: not a constant");
    return terms_[0].coeff;
}

int SymPoly::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.degree());
    return d;
}

std::vector<CoeffVar> SymPoly::variables() const {
    std::vector<CoeffVar> vs;
    for (const auto& t : terms_)
        for (const auto& v : t.vars) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

SymPoly SymPoly::conj() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        m.coeff = t.coeff.conj();
        m.vars.reserve(t.vars.size());
        for (const auto& v : t.vars) m.vars.push_back(v.conj());
        out.push_back(std::move(m));
    }
    return from_terms(std::move(out));
}

SymPoly SymPoly::substitute(const std::map<CoeffVar, SymPoly>& assignment) const {
    // Assigning v implies conj(v) |-> conj(value); absent conjugate entries
    // are completed, explicit ones win (a rewrite map may treat the two
    // sides of a pair differently). Explicit constant pairs must agree.
    std::map<CoeffVar, SymPoly> full = assignment;
    for (const auto& [v, value] : assignment) {
        CoeffVar vc = v.conj();
        auto it = full.find(vc);
        if (it == full.end()) {
            full.emplace(vc, value.conj());
        } else if (value.is_constant() && it->second.is_constant() &&
                   !(it->second == value.conj())) {
            throw std::invalid_argument("SymPoly::substitute: inconsistent assignment for " +
                                        v.str() + " and " + vc.str());
        }
    }
    std::vector<Monomial> out;
    for (const auto& t : terms_) {
        SymPoly term = SymPoly::constant(t.coeff);
        for (const auto& v : t.vars) {
            auto it = full.find(v);
            term = term * (it != full.end() ? it->second : SymPoly::var(v));
        }
        out.insert(out.end(), term.terms().begin(), term.terms().end());
    }
    return from_terms(std::move(out));
}

GaussRat SymPoly::evaluate(const std::map<CoeffVar, GaussRat>& assignment) const {
    std::map<CoeffVar, GaussRat> full = assignment;
    for (const auto& [v, value] : assignment) {
        CoeffVar vc = v.conj();
        GaussRat expected = value.conj();
        auto it = full.find(vc);
        if (it == full.end()) {
            full.emplace(vc, expected);
        } else if (!(it->second == expected)) {
            throw std::invalid_argument("SymPoly::evaluate: inconsistent assignment for " + v.str());
        }
    }
    GaussRat result(0);
    for (const auto& t : terms_) {
        GaussRat term = t.coeff;
        for (const auto& v : t.vars) {
            auto it = full.find(v);
            if (it == full.end())
                throw std::invalid_argument("SymPoly::evaluate: no value for " + v.str());
            term *= it->second;
        }
        result += term;
    }
    return result;
}

std::map<int, SymPoly> SymPoly::weight_grade() const {
    std::map<int, std::vector<Monomial>> buckets;
    for (const auto& t : terms_) buckets[t.weight()].push_back(t);
    std::map<int, SymPoly> out;
    for (auto& [w, ts] : buckets) out.emplace(w, from_terms(std::move(ts)));
    return out;
}

SymPoly operator-(const SymPoly& p) {
    std::vector<Monomial> out = p.terms_;
    for (auto& t : out) t.coeff = -t.coeff;
    SymPoly r;
    r.terms_ = std::move(out);  // negation preserves canonical order
    return r;
}

SymPoly operator+(const SymPoly& p, const SymPoly& q) {
    std::vector<Monomial> out;
    out.reserve(p.terms_.size() + q.terms_.size());
    out.insert(out.end(), p.terms_.begin(), p.terms_.end());
    out.insert(out.end(), q.terms_.begin(), q.terms_.end());
    return SymPoly::from_terms(std::move(out));
}

SymPoly operator-(const SymPoly& p, const SymPoly& q) { return p + (-q); }

SymPoly operator*(const SymPoly& p, const SymPoly& q) {
    std::vector<Monomial> out;
    out.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_) {
        for (const auto& b : q.terms_) {
            Monomial m;
            m.coeff = a.coeff * b.coeff;
            m.vars.reserve(a.vars.size() + b.vars.size());
            std::merge(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(),
                       std::back_inserter(m.vars));
            out.push_back(std::move(m));
        }
    }
    return SymPoly::from_terms(std::move(out));
}

SymPoly operator*(const GaussRat& c, const SymPoly& p) {
    if (c.is_zero()) return SymPoly{};
    std::vector<Monomial> out = p.terms_;
    for (auto& t : out) t.coeff = c * t.coeff;
    SymPoly r;
    r.terms_ = std::move(out);
    return r;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) s += " + ";
        const Monomial& t = terms_[i];
        s += "(" + t.coeff.str() + ")";
        size_t j = 0;
        while (j < t.vars.size()) {
            size_t k = j;
            while (k < t.vars.size() && t.vars[k] == t.vars[j]) ++k;
            s += "*" + t.vars[j].str();
            if (k - j > 1) s += "^" + std::to_string(k - j);
            j = k;
        }
    }
    return s;
}

namespace {

struct PolyParser {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("SymPoly: " + what + " at offset " + std::to_string(pos));
    }
    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void expect(char c) {
        if (eof() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    int read_int() {
        size_t start = pos;
        if (!eof() && (peek() == '-' || peek() == '+')) ++pos;
        size_t digits = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) fail("expected integer");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    CoeffVar read_var() {
        CoeffVar v;
        if (!eof() && peek() == '~') {
            v.conjugated = true;
            ++pos;
        }
        if (eof() || (peek() != 'p' && peek() != 'q')) fail("expected variable");
        v.qside = (peek() == 'q');
        ++pos;
        expect('[');
        v.a = read_int();
        expect(',');
        v.b = read_int();
        expect(']');
        return v;
    }

    Monomial read_term() {
        Monomial m;
        m.coeff = GaussRat(1);
        if (!eof() && peek() == '(') {
            ++pos;
            size_t depth_end = text.find(')', pos);
            if (depth_end == std::string_view::npos) fail("unterminated coefficient");
            m.coeff = GaussRat::parse(text.substr(pos, depth_end - pos));
            pos = depth_end + 1;
            while (!eof() && peek() == '*') {
                ++pos;
                read_factor(m);
            }
        } else {
            read_factor(m);
            while (!eof() && peek() == '*') {
                ++pos;
                read_factor(m);
            }
        }
        return m;
    }

    void read_factor(Monomial& m) {
        CoeffVar v = read_var();
        int power = 1;
        if (!eof() && peek() == '^') {
            ++pos;
            power = read_int();
            if (power < 1) fail("bad exponent");
        }
        for (int i = 0; i < power; ++i) m.vars.push_back(v);
    }

    SymPoly parse() {
        while (!eof() && peek() == ' ') ++pos;
        if (!eof() && peek() == '0' && pos + 1 == text.size()) return SymPoly{};
        std::vector<Monomial> terms;
        terms.push_back(read_term());
        while (!eof()) {
            if (text.substr(pos, 3) != " + ") fail("expected ' + '");
            pos += 3;
            terms.push_back(read_term());
        }
        return SymPoly::from_terms(std::move(terms));
    }
};

}  // namespace

SymPoly SymPoly::parse(std::string_view text) {
    PolyParser p{text};
    return p.parse();
}

}  // namespace isochron
