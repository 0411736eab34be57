#include "isochron/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace isochron {

std::string Letter::str() const {
    return "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
}

int word_weight(const Word& w) {
    int s = 0;
    for (const auto& n : w) s += n.weight();
    return s;
}

int word_depth(const Word& w) {
    int s = 0;
    for (const auto& n : w) s += n.depth();
    return s;
}

bool is_resonant(const Word& w) { return word_weight(w) == 0; }

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::string word_str(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0) s += ".";
        s += w[i].str();
    }
    return s;
}

Word parse_word(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("Word: cannot parse '" + std::string(text) + "'"); };
    Word w;
    size_t pos = 0;
    auto read_int = [&]() -> int {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) bad();
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    while (pos < text.size()) {
        if (!w.empty()) {
            if (text[pos] != '.') bad();
            ++pos;
        }
        if (pos >= text.size() || text[pos] != '(') bad();
        ++pos;
        Letter n;
        n.n1 = read_int();
        if (pos >= text.size() || text[pos] != ',') bad();
        ++pos;
        n.n2 = read_int();
        if (pos >= text.size() || text[pos] != ')') bad();
        ++pos;
        w.push_back(n);
    }
    return w;
}

std::vector<Letter> alphabet_of_component(int r) {
    if (r < 2) throw std::invalid_argument("alphabet_of_component: r must be >= 2");
    std::vector<Letter> letters;
    letters.push_back(Letter{r, -1});
    letters.push_back(Letter{-1, r});
    for (int k = 1; k <= r; ++k) letters.push_back(Letter{k - 1, r - k});
    std::sort(letters.begin(), letters.end());
    return letters;
}

std::optional<Letter> resonant_letter_of(int r) {
    if (r < 2) throw std::invalid_argument("resonant_letter_of: r must be >= 2");
    if (r % 2 == 0) return std::nullopt;
    return Letter{(r - 1) / 2, (r - 1) / 2};
}

std::vector<Word> enumerate_resonant_words(const std::set<int>& components, int depth,
                                           const EnumerateOptions& opts) {
    if (depth < 1) throw std::invalid_argument("enumerate_resonant_words: depth must be >= 1");
    std::vector<Letter> letters;
    for (int r : components) {
        auto a = alphabet_of_component(r);
        letters.insert(letters.end(), a.begin(), a.end());
    }
    std::sort(letters.begin(), letters.end());

    const int max_len = opts.max_len.value_or(depth);
    std::vector<Word> out;
    Word current;

    // Depth-bounded DFS over letters in canonical order; every letter has
    // depth >= 1 so the branch bound is tight.
    auto dfs = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (!current.empty() && word_weight(current) == 0) out.push_back(current);
            return;
        }
        if (static_cast<int>(current.size()) >= max_len) return;
        for (const auto& n : letters) {
            if (n.depth() > remaining) continue;
            if (opts.prune_zero_weight_letters && n.weight() == 0 &&
                !(current.empty() && remaining == n.depth())) {
                continue;  // zero-weight letters survive only as singleton words
            }
            current.push_back(n);
            self(self, remaining - n.depth());
            current.pop_back();
        }
    };
    dfs(dfs, depth);

    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    return out;
}

}  // namespace isochron
