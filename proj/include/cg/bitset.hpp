#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace cg {

// Dynamic bitset over a fixed universe [0, size()). Vertex sets and adjacency
// rows are all instances of this; word-parallel ops keep the enumeration
// kernels allocation-light.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bitset from_indices(int nbits, const std::vector<int>& idx) {
        Bitset b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }

    int size() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { std::fill(w_.begin(), w_.end(), uint64_t(0)); }

    void fill_all() {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] = ~uint64_t(0);
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set bit, -1 if empty.
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement_universe() const {
        Bitset r(nbits_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    int intersection_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t x = w_[k];
            while (x) {
                f(int(k * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size_t(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    // Order matching lexicographic comparison of the sorted element lists,
    // so {0,2} < {1}, {0} < {0,1}. Used for canonical result ordering.
    static bool set_less(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        for (size_t k = 0; k < a.w_.size(); ++k) {
            uint64_t diff = a.w_[k] ^ b.w_[k];
            if (!diff) continue;
            int bit = std::countr_zero(diff);
            uint64_t rest_mask = bit == 63 ? 0 : ~((uint64_t(1) << (bit + 1)) - 1);
            // bit belongs to exactly one side; the other side is smaller iff
            // it has no element after this position.
            bool in_a = (a.w_[k] >> bit) & 1;
            const Bitset& other = in_a ? b : a;
            bool other_has_rest = (other.w_[k] & rest_mask) != 0;
            for (size_t j = k + 1; !other_has_rest && j < a.w_.size(); ++j)
                other_has_rest = other.w_[j] != 0;
            return in_a ? other_has_rest : !other_has_rest;
        }
        return false;
    }

    uint64_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t x : w_) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    void trim() {
        int r = nbits_ & 63;
        if (r && !w_.empty()) w_.back() &= (uint64_t(1) << r) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return size_t(b.hash()); }
};

}  // namespace cg
