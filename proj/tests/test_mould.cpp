#include "isochron/mould.hpp"

#include "isochron/golden_tables.hpp"

#include <doctest.h>

#include <random>

using namespace isochron;

namespace {

GaussRat om(int w) { return GaussRat::imag(BigRat(w)); }

}  // namespace

TEST_CASE("length-2 golden table") {
    for (const auto& e : golden::kLength2Table) {
        CAPTURE(e.word);
        CHECK(carr_value(parse_word(e.word)) == GaussRat::parse(e.value));
    }
}

TEST_CASE("length-4 golden table") {
    for (const auto& e : golden::kLength4Table) {
        CAPTURE(e.word);
        CHECK(carr_value(parse_word(e.word)) == GaussRat::parse(e.value));
    }
}

TEST_CASE("degenerate keys") {
    CHECK(carr_value(WeightKey{}) == GaussRat(0));
    CHECK(carr_value(WeightKey{5}) == GaussRat(0));
    CHECK(carr_value(WeightKey{0}) == GaussRat(1));
    CHECK(carr_value(WeightKey{1, 0, -1}) == GaussRat(0));  // interior zero weight
    CHECK(carr_value(WeightKey{0, 0}) == GaussRat(0));
}

TEST_CASE("closed forms") {
    CHECK(carr_closed_form_c2(om(1), om(-1)) == GaussRat::i());
    CHECK(carr_closed_form_c3(om(1), om(1), om(-2)) == GaussRat(BigRat(-1, 2)));
    CHECK(carr_closed_form_c3(om(1), om(-1), om(0)) == GaussRat(0));
    CHECK(carr_closed_form_c1(GaussRat(0)) == GaussRat(1));
    CHECK(carr_closed_form_c1(om(3)) == GaussRat(0));
}

TEST_CASE("closed-form consistency on random short keys") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> w(-6, 6);
    std::uniform_int_distribution<int> len(1, 3);
    for (int s = 0; s < 1000; ++s) {
        WeightKey key;
        int n = len(rng);
        for (int i = 0; i < n; ++i) key.push_back(w(rng));
        CAPTURE(key);
        GaussRat closed = n == 1   ? carr_closed_form_c1(om(key[0]))
                          : n == 2 ? carr_closed_form_c2(om(key[0]), om(key[1]))
                                   : carr_closed_form_c3(om(key[0]), om(key[1]), om(key[2]));
        CHECK(carr_value(key) == closed);
    }
}

TEST_CASE("universality: value depends only on the weight sequence") {
    // Words over different alphabets realizing the same weight sequences.
    CHECK(carr_value(parse_word("(2,1).(1,2)")) == carr_value(parse_word("(1,0).(0,1)")));
    CHECK(carr_value(parse_word("(3,0).(0,3)")) == carr_value(parse_word("(2,-1).(-1,2)")));
    CHECK(carr_value(parse_word("(2,1).(1,2).(2,1).(1,2)")) ==
          carr_value(parse_word("(1,0).(0,1).(1,0).(0,1)")));
}

TEST_CASE("values lie in Q for odd length and iQ for even length") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> w(-4, 4);
    std::uniform_int_distribution<int> len(2, 6);
    int resonant_seen = 0;
    for (int s = 0; s < 4000; ++s) {
        int n = len(rng);
        WeightKey key;
        int total = 0;
        for (int i = 0; i < n - 1; ++i) {
            key.push_back(w(rng));
            total += key.back();
        }
        key.push_back(-total);  // force resonance
        GaussRat v = carr_value(key);
        if (v.is_zero()) continue;
        ++resonant_seen;
        if (n % 2 == 0) {
            CHECK(v.re().is_zero());
        } else {
            CHECK(v.im().is_zero());
        }
    }
    CHECK(resonant_seen > 500);
}

TEST_CASE("length-2 antisymmetry") {
    for (int z = 1; z <= 8; ++z) {
        CHECK(carr_value(WeightKey{z, -z}) == -carr_value(WeightKey{-z, z}));
    }
}

TEST_CASE("memoized rederivation is stable") {
    MouldTable t1, t2;
    WeightKey key{-3, -3, 3, 3};
    GaussRat a = t1.value(key);
    GaussRat b = t1.value(key);
    GaussRat c = t2.value(key);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(t1.cache_size() >= 1);
}

TEST_CASE("alternality defect vanishes for all pairs of total length <= 4") {
    auto letters = alphabet_of_component(2);
    std::vector<Word> words[4];  // by length 1..3
    for (const auto& a : letters) words[1].push_back({a});
    for (const auto& a : letters)
        for (const auto& b : letters) words[2].push_back({a, b});
    for (const auto& a : letters)
        for (const auto& b : letters)
            for (const auto& c : letters) words[3].push_back({a, b, c});
    Mould carr = [](const WeightKey& k) { return carr_value(k); };
    for (int lu = 1; lu <= 3; ++lu) {
        for (int lv = 1; lv + lu <= 4; ++lv) {
            for (const auto& u : words[lu]) {
                for (const auto& v : words[lv]) {
                    CAPTURE(word_str(u));
                    CAPTURE(word_str(v));
                    CHECK(alternality_defect(carr, u, v) == GaussRat(0));
                }
            }
        }
    }
}

TEST_CASE("shuffles") {
    auto s = shuffle_keys({1}, {2, 3});
    CHECK(s.size() == 3);
    CHECK(shuffle_keys({1, 2}, {3, 4}).size() == 6);
    // Multiplicity is kept: shuffling equal letters still yields C(2,1) = 2.
    CHECK(shuffle_keys({1}, {1}).size() == 2);
}

TEST_CASE("mould composition") {
    Mould carr = [](const WeightKey& k) { return carr_value(k); };
    Mould unit = unit_mould;
    // Unit laws on short keys.
    for (const WeightKey& k : {WeightKey{1, -1}, WeightKey{3, -3}, WeightKey{2, -1, -1}}) {
        CHECK(mould_compose(unit, carr, k) ==
              carr_value(k));  // collapsing to one letter keeps resonance only
    }
    CHECK(mould_compose(carr, unit, WeightKey{1, -1}) == carr_value(WeightKey{1, -1}));

    // Decompositions of a length-3 word into ordered nonempty blocks: 4.
    Mould ones = [](const WeightKey&) { return GaussRat(1); };
    CHECK(mould_compose(ones, ones, WeightKey{1, 2, 3}) == GaussRat(4));

    // Stabilization: (I - Tram) o (I - Carr) = I - Carr on short words.
    Mould i_minus_tram = [](const WeightKey& k) { return unit_mould(k) - tram_value(k); };
    Mould i_minus_carr = [](const WeightKey& k) { return unit_mould(k) - carr_value(k); };
    std::vector<WeightKey> keys{{1, -1},       {-3, 3},       {3, -3},  {1, 1, -2},
                                {2, -1, -1},   {4, -2, -2},   {2, 2, -4}};
    for (const auto& k : keys) {
        CAPTURE(k);
        CHECK(mould_compose(i_minus_tram, i_minus_carr, k) ==
              unit_mould(k) - carr_value(k));
    }
    CHECK_THROWS_AS(tram_value(WeightKey{1, 1, -1, -1}), std::invalid_argument);
}

TEST_CASE("alternality defect rejects empty words") {
    Mould carr = [](const WeightKey& k) { return carr_value(k); };
    CHECK_THROWS_AS(alternality_defect(carr, WeightKey{}, WeightKey{1}), std::invalid_argument);
}
