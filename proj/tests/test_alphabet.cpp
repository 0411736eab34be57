#include "isochron/alphabet.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace isochron;

TEST_CASE("component alphabets") {
    CHECK(alphabet_of_component(2) ==
          std::vector<Letter>{{-1, 2}, {0, 1}, {1, 0}, {2, -1}});
    CHECK(alphabet_of_component(3) ==
          std::vector<Letter>{{-1, 3}, {0, 2}, {1, 1}, {2, 0}, {3, -1}});
    auto a4 = alphabet_of_component(4);
    CHECK(a4.size() == 6);
    for (const auto& n : a4) CHECK(n.weight() != 0);  // even degree: no resonant letter
    for (int r = 2; r <= 8; ++r) {
        auto a = alphabet_of_component(r);
        CHECK(a.size() == static_cast<size_t>(r) + 2);
        for (const auto& n : a) {
            CHECK(n.admissible());
            CHECK(n.depth() == r - 1);
        }
    }
    CHECK_THROWS_AS(alphabet_of_component(1), std::invalid_argument);
}

TEST_CASE("alphabets of distinct components are disjoint") {
    for (int r = 2; r <= 6; ++r) {
        for (int s = r + 1; s <= 6; ++s) {
            for (const auto& n : alphabet_of_component(r)) {
                for (const auto& m : alphabet_of_component(s)) CHECK(n != m);
            }
        }
    }
}

TEST_CASE("resonant letters") {
    CHECK(resonant_letter_of(3) == Letter{1, 1});
    CHECK(resonant_letter_of(2) == std::nullopt);
    CHECK(resonant_letter_of(5) == Letter{2, 2});
    CHECK(resonant_letter_of(4) == std::nullopt);
}

TEST_CASE("weight and depth are concatenation morphisms") {
    CHECK(word_weight(Word{}) == 0);
    CHECK(word_depth(Word{}) == 0);
    CHECK(word_weight({{1, 0}, {0, 1}}) == 0);
    CHECK(word_depth({{1, 0}, {0, 1}}) == 2);
    CHECK(word_weight({{2, -1}, {1, 0}}) == 4);
    CHECK(word_depth({{1, 1}}) == 2);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pick(0, 8);
    std::uniform_int_distribution<int> len(0, 6);
    auto letters = alphabet_of_component(2);
    auto more = alphabet_of_component(4);
    letters.insert(letters.end(), more.begin(), more.end());
    for (int s = 0; s < 100; ++s) {
        Word u, v;
        for (int i = len(rng); i > 0; --i) u.push_back(letters[pick(rng) % letters.size()]);
        for (int i = len(rng); i > 0; --i) v.push_back(letters[pick(rng) % letters.size()]);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(word_weight(uv) == word_weight(u) + word_weight(v));
        CHECK(word_depth(uv) == word_depth(u) + word_depth(v));
    }
}

TEST_CASE("resonant word enumeration") {
    auto d2 = enumerate_resonant_words({2}, 2);
    CHECK(d2 == std::vector<Word>{{{-1, 2}, {2, -1}},
                                  {{0, 1}, {1, 0}},
                                  {{1, 0}, {0, 1}},
                                  {{2, -1}, {-1, 2}}});

    auto d4 = enumerate_resonant_words({2}, 4);
    CHECK(d4.size() == 44);
    for (const auto& w : d4) {
        CHECK(w.size() == 4);
        CHECK(word_weight(w) == 0);
        CHECK(word_depth(w) == 4);
    }

    auto cubic = enumerate_resonant_words({3}, 2);
    CHECK(cubic == std::vector<Word>{{{1, 1}}});

    // Reversal closure.
    for (const auto& w : d4) {
        Word r = reversed(w);
        CHECK(std::find(d4.begin(), d4.end(), r) != d4.end());
    }

    // The prune flag only drops words with an interior zero-weight letter.
    auto pruned = enumerate_resonant_words({3}, 4);
    EnumerateOptions keep;
    keep.prune_zero_weight_letters = false;
    auto unpruned = enumerate_resonant_words({3}, 4, keep);
    CHECK(unpruned.size() > pruned.size());
    for (const auto& w : pruned) {
        bool has_zero = false;
        for (const auto& n : w) has_zero = has_zero || n.weight() == 0;
        CHECK((w.size() == 1 || !has_zero));
    }
}

TEST_CASE("word text round trip") {
    Word w{{1, 0}, {0, 1}, {-1, 2}};
    CHECK(word_str(w) == "(1,0).(0,1).(-1,2)");
    CHECK(parse_word("(1,0).(0,1).(-1,2)") == w);
    CHECK(parse_word("") == Word{});
    CHECK_THROWS_AS(parse_word("(1,0."), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(1,0),(0,1)"), std::invalid_argument);
}
