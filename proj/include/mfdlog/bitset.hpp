#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mfdlog {

/// Fixed-universe dynamic bitset used for interpretations and rule masks.
/// The universe size is set at construction; all binary operations assume
/// both operands share the same universe.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe_size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    /// First set bit at position >= from, or universe_size() if none.
    std::size_t next(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(cur));
            if (++w >= words_.size()) return size_;
            cur = words_[w];
        }
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = next(0); i < size_; i = next(i + 1)) out.push_back(i);
        return out;
    }

    /// Order by cardinality, then by the id sequence read lexicographically.
    static bool model_order(const Bitset& a, const Bitset& b) {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        std::size_t i = a.next(0), j = b.next(0);
        while (i < a.size_ && j < b.size_) {
            if (i != j) return i < j;
            i = a.next(i + 1);
            j = b.next(j + 1);
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) {
            h ^= static_cast<std::size_t>(w);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    // word-level access for allocation-free fused scans
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }

    /// this |= (src & ~excluded); reports whether any bit was added.
    bool set_masked(const Bitset& src, const Bitset& excluded) {
        bool changed = false;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t add = src.words_[i] & ~excluded.words_[i] & ~words_[i];
            if (add) {
                words_[i] |= add;
                changed = true;
            }
        }
        return changed;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace mfdlog
