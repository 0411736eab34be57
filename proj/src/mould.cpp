#include "isochron/mould.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace isochron {

WeightKey key_of(const Word& w) {
    WeightKey k;
    k.reserve(w.size());
    for (const auto& n : w) k.push_back(n.weight());
    return k;
}

GaussRat carr_closed_form_c1(const GaussRat& z1) {
    return z1.is_zero() ? GaussRat(1) : GaussRat(0);
}

GaussRat carr_closed_form_c2(const GaussRat& z1, const GaussRat& z2) {
    if (!(z1 + z2).is_zero() || z1.is_zero()) return GaussRat(0);
    return -z1.inv();
}

GaussRat carr_closed_form_c3(const GaussRat& z1, const GaussRat& z2, const GaussRat& z3) {
    // z2 != 0 completes the guard set: a zero interior weight forces the
    // value to vanish (the recursion gives 0 there, e.g. on (i, 0, -i)).
    GaussRat z12 = z1 + z2;
    if (!(z12 + z3).is_zero() || z1.is_zero() || z2.is_zero() || z12.is_zero()) return GaussRat(0);
    return (z1 * z12).inv();
}

namespace {

GaussRat omega(int w) { return GaussRat::imag(BigRat(w)); }  // actual weight i*w

bool has_zero_entry(const WeightKey& key) {
    return std::any_of(key.begin(), key.end(), [](int w) { return w == 0; });
}

int key_total(const WeightKey& key) { return std::accumulate(key.begin(), key.end(), 0); }

}  // namespace

GaussRat MouldTable::value(const WeightKey& key) const {
    if (key.empty()) return GaussRat(0);
    if (key_total(key) != 0) return GaussRat(0);
    if (key.size() >= 2 && has_zero_entry(key)) return GaussRat(0);
    if (key.size() == 1) return GaussRat(1);  // zero weight by the checks above
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    GaussRat v = eval(key);
    {
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(key, v);
    }
    return v;
}

GaussRat MouldTable::eval(const WeightKey& key) const {
    const size_t r = key.size();
    if (r == 2) return carr_closed_form_c2(omega(key[0]), omega(key[1]));
    if (r == 3) return carr_closed_form_c3(omega(key[0]), omega(key[1]), omega(key[2]));

    // Variance recursion solved for the full word (key[0] is nonzero here):
    //   w(n1) Carr^{n1..nr} = sum_{n1 b c = n, b nonempty} Carr^{n1 c} Carr^{b}
    //                         - Carr^{(n1+n2) n3..nr}
    GaussRat sum(0);
    const size_t rest = r - 1;  // entries key[1..]
    for (size_t blen = 1; blen <= rest; ++blen) {
        WeightKey b(key.begin() + 1, key.begin() + 1 + blen);
        WeightKey head_tail;
        head_tail.reserve(r - blen);
        head_tail.push_back(key[0]);
        head_tail.insert(head_tail.end(), key.begin() + 1 + blen, key.end());
        GaussRat vb = value(b);
        if (vb.is_zero()) continue;
        sum += value(head_tail) * vb;
    }
    WeightKey merged;
    merged.reserve(r - 1);
    merged.push_back(key[0] + key[1]);
    merged.insert(merged.end(), key.begin() + 2, key.end());
    sum -= value(merged);
    return sum / omega(key[0]);
}

std::size_t MouldTable::cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
}

GaussRat carr_value(const WeightKey& key) {
    static MouldTable table;
    return table.value(key);
}

GaussRat carr_value(const Word& w) { return carr_value(key_of(w)); }

GaussRat unit_mould(const WeightKey& key) {
    return key.size() == 1 ? GaussRat(1) : GaussRat(0);
}

GaussRat tram_value(const WeightKey& key) {
    if (key.size() > 3)
        throw std::invalid_argument("tram_value: only lengths <= 3 are implemented");
    if (key.empty()) return GaussRat(0);
    if (key_total(key) != 0) return GaussRat(0);
    if (key.size() == 1) return GaussRat(1);
    if (key.size() >= 2 && has_zero_entry(key)) return GaussRat(0);
    if (key.size() == 2) return carr_closed_form_c2(omega(key[0]), omega(key[1]));
    return carr_closed_form_c3(omega(key[0]), omega(key[1]), omega(key[2]));
}

GaussRat mould_compose(const Mould& m, const Mould& n, const WeightKey& w) {
    const size_t len = w.size();
    if (len == 0) return GaussRat(0);
    GaussRat total(0);
    // Cut positions encoded as a bitmask over the len-1 gaps.
    const unsigned long long masks = 1ull << (len - 1);
    for (unsigned long long mask = 0; mask < masks; ++mask) {
        WeightKey collapsed;
        GaussRat prod(1);
        size_t start = 0;
        bool dead = false;
        for (size_t i = 0; i < len && !dead; ++i) {
            bool cut = (i + 1 == len) || (mask & (1ull << i));
            if (!cut) continue;
            WeightKey block(w.begin() + start, w.begin() + i + 1);
            collapsed.push_back(key_total(block));
            GaussRat nb = n(block);
            if (nb.is_zero()) dead = true;
            prod *= nb;
            start = i + 1;
        }
        if (dead) continue;
        total += m(collapsed) * prod;
    }
    return total;
}

std::vector<WeightKey> shuffle_keys(const WeightKey& u, const WeightKey& v) {
    std::vector<WeightKey> out;
    WeightKey current;
    current.reserve(u.size() + v.size());
    auto rec = [&](auto&& self, size_t i, size_t j) -> void {
        if (i == u.size() && j == v.size()) {
            out.push_back(current);
            return;
        }
        if (i < u.size()) {
            current.push_back(u[i]);
            self(self, i + 1, j);
            current.pop_back();
        }
        if (j < v.size()) {
            current.push_back(v[j]);
            self(self, i, j + 1);
            current.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

GaussRat alternality_defect(const Mould& m, const WeightKey& u, const WeightKey& v) {
    if (u.empty() || v.empty())
        throw std::invalid_argument("alternality_defect: words must be nonempty");
    GaussRat sum(0);
    for (const auto& s : shuffle_keys(u, v)) sum += m(s);
    return sum;
}

GaussRat alternality_defect(const Mould& m, const Word& u, const Word& v) {
    return alternality_defect(m, key_of(u), key_of(v));
}

}  // namespace isochron
