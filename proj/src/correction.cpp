#include "isochron/correction.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

namespace isochron {

BigRat length_factor(int len) { return BigRat(1, len); }

SymPoly CorrectionTerm::normalized_part(int len) const {
    auto it = parts.find(len);
    if (it == parts.end()) return SymPoly{};
    return GaussRat(length_factor(len)) * it->second;
}

namespace {

unsigned thread_count(std::size_t work_items) {
    if (work_items < 64) return 1;  // not worth spawning
    unsigned n = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("ISOCHRON_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) n = static_cast<unsigned>(v);
    }
    return n == 0 ? 1 : n;
}

struct WordContribution {
    SymPoly p;
    SymPoly q;
};

/// Evaluates f on every word, in parallel, and returns results in word
/// order so downstream folds are schedule-independent.
template <typename F>
std::vector<WordContribution> map_words(const std::vector<Word>& words, F&& f) {
    std::vector<WordContribution> out(words.size());
    unsigned threads = thread_count(words.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < words.size(); ++i) out[i] = f(words[i]);
        return out;
    }
    std::vector<std::future<void>> futures;
    std::size_t chunk = (words.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(words.size(), lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = f(words[i]);
        }));
    }
    for (auto& fu : futures) fu.get();
    return out;
}

std::vector<int> word_component_degrees(const Word& w) {
    std::vector<int> degs;
    degs.reserve(w.size());
    for (const auto& n : w) degs.push_back(n.depth() + 1);
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    return degs;
}

CorrectionTerm assemble(const FieldSpec& spec, int depth) {
    if (depth < 1) throw std::invalid_argument("correction: depth must be >= 1");
    validate_assignment(spec);
    CorrectionTerm term;
    term.depth = depth;
    if (spec.components.empty()) return term;

    OperatorSet ops = operators_for(spec);
    std::vector<Word> words = enumerate_resonant_words(spec.component_degrees(), depth);

    auto contributions = map_words(words, [&](const Word& w) -> WordContribution {
        GaussRat val = carr_value(w);
        if (val.is_zero()) return {};
        BracketCoeffs bc = bracket_coeffs(w, ops);
        return {val * bc.p, val * bc.q};
    });

    // Batch the term lists and canonicalize once per bucket.
    std::map<int, std::vector<Monomial>> bucket_p;
    std::map<int, std::vector<Monomial>> bucket_q;
    std::map<std::pair<int, std::vector<int>>, std::vector<Monomial>> bucket_comp;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (contributions[i].p.is_zero() && contributions[i].q.is_zero()) continue;
        int len = static_cast<int>(words[i].size());
        const auto& tp = contributions[i].p.terms();
        const auto& tq = contributions[i].q.terms();
        auto& bp = bucket_p[len];
        bp.insert(bp.end(), tp.begin(), tp.end());
        auto& bq = bucket_q[len];
        bq.insert(bq.end(), tq.begin(), tq.end());
        auto& bc = bucket_comp[{len, word_component_degrees(words[i])}];
        bc.insert(bc.end(), tp.begin(), tp.end());
    }

    const bool symbolic = !spec.is_numeric();
    auto finish = [&](SymPoly poly) {
        return symbolic ? reduce(poly, spec) : std::move(poly);
    };
    for (auto& [len, terms] : bucket_p) {
        SymPoly part = finish(SymPoly::from_terms(std::move(terms)));
        term.total += GaussRat(length_factor(len)) * part;
        term.parts.emplace(len, std::move(part));
    }
    for (auto& [len, terms] : bucket_q) {
        term.total_q += GaussRat(length_factor(len)) *
                        finish(SymPoly::from_terms(std::move(terms)));
    }
    for (auto& [key, terms] : bucket_comp) {
        term.component_parts.emplace(
            key, GaussRat(length_factor(key.first)) *
                     finish(SymPoly::from_terms(std::move(terms))));
    }
    return term;
}

}  // namespace

CorrectionTerm correction_term(const FieldSpec& spec, int depth) {
    if (depth < 2 || depth % 2 != 0)
        throw std::invalid_argument("correction_term: depth must be even and >= 2");
    return assemble(spec, depth);
}

SymPoly correction_oracle(const FieldSpec& spec, int depth) {
    if (depth < 1) throw std::invalid_argument("correction_oracle: depth must be >= 1");
    validate_assignment(spec);
    if (spec.components.empty()) return SymPoly{};

    OperatorSet ops = operators_for(spec);
    std::vector<Word> words = enumerate_resonant_words(spec.component_degrees(), depth);

    const int want_l = depth / 2 + 1;
    const int want_k = depth / 2;
    auto contributions = map_words(words, [&](const Word& w) -> WordContribution {
        GaussRat val = carr_value(w);
        if (val.is_zero()) return {};
        ApplyResult res = compose_apply(w, ops, 1, 0);
        if (res.l != want_l || res.k != want_k) return {};  // resonant words always match
        return {val * res.scalar, SymPoly{}};
    });

    std::vector<Monomial> bucket;
    for (const auto& c : contributions) {
        const auto& ts = c.p.terms();
        bucket.insert(bucket.end(), ts.begin(), ts.end());
    }
    SymPoly total = SymPoly::from_terms(std::move(bucket));
    return spec.is_numeric() ? total : reduce(total, spec);
}

GaussRat correction_value(const FieldSpec& spec, int depth) {
    if (!spec.is_numeric())
        throw std::invalid_argument("correction_value: spec must be numeric");
    return assemble(spec, depth).total.constant_value();
}

SymPoly fundamental_lemma_value(int r, const FieldSpec& spec) {
    if (r < 2) throw std::invalid_argument("fundamental_lemma_value: r must be >= 2");
    if (!spec.hamiltonian)
        throw std::invalid_argument("fundamental_lemma_value: spec must be Hamiltonian");
    for (int deg : spec.component_degrees()) {
        if (deg < r || deg > 2 * r - 1)
            throw std::invalid_argument(
                "fundamental_lemma_value: components must lie in degrees r..2r-1");
    }
    SymPoly fl;
    auto degrees = spec.component_degrees();
    if (degrees.count(2 * r - 1)) fl += SymPoly::var(CoeffVar::p(r - 1, r - 1));
    if (degrees.count(r)) {
        for (int k = (r + 1) / 2 + 1; k <= r; ++k) {
            const int a = k - 1;
            const int b = r - k;
            GaussRat coeff = GaussRat::imag(
                BigRat(static_cast<long long>(r) * (r + 1), static_cast<long long>(r - k + 1) * (r - k + 1)));
            fl += coeff * (SymPoly::var(CoeffVar::p(a, b)) * SymPoly::var(CoeffVar::pbar(a, b)));
        }
        GaussRat edge = GaussRat::imag(BigRat(r, r + 1));
        fl += edge * (SymPoly::var(CoeffVar::p(-1, r)) * SymPoly::var(CoeffVar::pbar(-1, r)));
    }
    return reduce(fl, spec);
}

SymPoly odd_depth_term(const FieldSpec& spec, int depth) {
    if (depth < 1 || depth % 2 != 1)
        throw std::invalid_argument("odd_depth_term: depth must be odd and >= 1");
    return assemble(spec, depth).total;
}

}  // namespace isochron
