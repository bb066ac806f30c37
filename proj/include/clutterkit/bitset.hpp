#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace clutterkit {

// Set of dense ids in [0, universe), one bit per id, 64-bit word blocks.
// All binary operations require both operands to share the same universe.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int universe)
        : n_(universe), words_(std::size_t(universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static Bitset of(int universe, std::initializer_list<int> ids) {
        Bitset s(universe);
        for (int i : ids) s.set(i);
        return s;
    }

    static Bitset full(int universe) {
        Bitset s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (words_[std::size_t(i) >> 6] >> (i & 63)) & 1;
    }

    void set(int i) {
        assert(i >= 0 && i < n_);
        words_[std::size_t(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < n_);
        words_[std::size_t(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool is_proper_subset_of(const Bitset& o) const {
        return is_subset_of(o) && *this != o;
    }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Smallest member, -1 when empty.
    int min_element() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return int(w * 64) + std::countr_zero(words_[w]);
        return -1;
    }

    // Largest member, -1 when empty.
    int max_element() const {
        for (std::size_t w = words_.size(); w-- > 0;)
            if (words_[w]) return int(w * 64) + 63 - std::countl_zero(words_[w]);
        return -1;
    }

    // True when some member is strictly greater than i.
    bool any_above(int i) const {
        assert(i >= 0 && i < n_);
        std::size_t w = std::size_t(i) >> 6;
        int r = i & 63;
        std::uint64_t high = (r == 63) ? 0 : (words_[w] & ~((std::uint64_t{2} << r) - 1));
        if (high) return true;
        for (std::size_t k = w + 1; k < words_.size(); ++k)
            if (words_[k]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator^=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    // Complement within the universe.
    Bitset operator~() const {
        Bitset r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(std::size_t(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(int(w * 64) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    // Three-way order of the ascending member sequences, prefixes first:
    // {} < {1} < {1,2} < {1,3} < {2}. Members below the smallest point of
    // disagreement d coincide, so the set holding d is the smaller sequence
    // unless the other set stops before d entirely.
    static int lex_compare(const Bitset& a, const Bitset& b) {
        assert(a.n_ == b.n_);
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            std::uint64_t diff = a.words_[w] ^ b.words_[w];
            if (!diff) continue;
            int d = int(w * 64) + std::countr_zero(diff);
            bool d_in_a = a.test(d);
            const Bitset& other = d_in_a ? b : a;
            if (other.any_above(d)) return d_in_a ? -1 : 1;
            return d_in_a ? 1 : -1;
        }
        return 0;
    }

    struct LexLess {
        bool operator()(const Bitset& a, const Bitset& b) const {
            return lex_compare(a, b) < 0;
        }
    };

    // "{0,2,5}", for diagnostics.
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

private:
    void trim() {
        if ((n_ & 63) != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace clutterkit
