/**
 * @file alphabet.hpp
 * @brief Letters and words indexing homogeneous operators: weights, depth,
 *        resonance, per-component alphabets and bounded enumeration of
 *        resonant words.
 *
 * A letter (n1, n2) carries integer weight n1 - n2 (the eigenvalue factor i
 * is reattached only where formulas need it) and depth n1 + n2 >= 1. Both
 * extend additively over concatenation.
 */
#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace isochron {

struct Letter {
    int n1 = 0;
    int n2 = 0;

    int weight() const { return n1 - n2; }
    int depth() const { return n1 + n2; }
    bool admissible() const { return n1 >= -1 && n2 >= -1 && n1 + n2 >= 1; }

    friend std::strong_ordering operator<=>(const Letter&, const Letter&) = default;
    friend bool operator==(const Letter&, const Letter&) = default;

    std::string str() const;  // "(1,0)"
};

using Word = std::vector<Letter>;

int word_weight(const Word& w);
int word_depth(const Word& w);
bool is_resonant(const Word& w);
Word reversed(const Word& w);

std::string word_str(const Word& w);      // "(1,0).(0,1)"
Word parse_word(std::string_view text);   // throws std::invalid_argument

/// Alphabet of the degree-r homogeneous component: the two edge letters
/// (r,-1), (-1,r) plus (k-1, r-k) for k = 1..r; cardinality r + 2, every
/// letter of depth r - 1. Throws std::invalid_argument for r < 2.
std::vector<Letter> alphabet_of_component(int r);

/// The unique zero-weight letter ((r-1)/2, (r-1)/2) when r is odd.
std::optional<Letter> resonant_letter_of(int r);

struct EnumerateOptions {
    std::optional<int> max_len;              // default: depth (letters have depth >= 1)
    bool prune_zero_weight_letters = true;   // drop length >= 2 words containing one
};

/// All words over the union alphabet of the given components with the exact
/// total depth and zero total weight, ordered by (length, letterwise order).
std::vector<Word> enumerate_resonant_words(const std::set<int>& components, int depth,
                                           const EnumerateOptions& opts = {});

}  // namespace isochron
