#pragma once

// Fixed-universe bitset over [0, size) backed by 64-bit words.
// This is the storage type behind every set-of-group-elements in the
// library; universes run from a handful of bits up to 2^24.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumsetlab {

class Bitmap {
public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitmap() = default;

    explicit Bitmap(std::uint64_t size, bool fill = false)
        : size_(size), words_((size + kWordBits - 1) / kWordBits, fill ? ~word_t{0} : word_t{0}) {
        if (fill) mask_tail();
    }

    static Bitmap from_indices(std::uint64_t size, std::initializer_list<std::uint64_t> idx) {
        Bitmap b(size);
        for (auto i : idx) b.set(i);
        return b;
    }

    std::uint64_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    word_t* data() noexcept { return words_.data(); }
    const word_t* data() const noexcept { return words_.data(); }

    bool test(std::uint64_t i) const {
        check_index(i);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }
    void set(std::uint64_t i) {
        check_index(i);
        words_[i / kWordBits] |= word_t{1} << (i % kWordBits);
    }
    void reset(std::uint64_t i) {
        check_index(i);
        words_[i / kWordBits] &= ~(word_t{1} << (i % kWordBits));
    }
    void clear() { std::fill(words_.begin(), words_.end(), word_t{0}); }

    std::uint64_t count() const noexcept {
        std::uint64_t c = 0;
        for (word_t w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const noexcept {
        for (word_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    /// Smallest member, or size() when empty.
    std::uint64_t first() const noexcept { return next(0); }

    /// Smallest member >= from, or size() when none.
    std::uint64_t next(std::uint64_t from) const noexcept {
        if (from >= size_) return size_;
        std::size_t w = from / kWordBits;
        word_t cur = words_[w] & (~word_t{0} << (from % kWordBits));
        while (true) {
            if (cur) return w * kWordBits + std::countr_zero(cur);
            if (++w == words_.size()) return size_;
            cur = words_[w];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_t cur = words_[w];
            while (cur) {
                f(w * kWordBits + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    std::vector<std::uint64_t> to_indices() const {
        std::vector<std::uint64_t> out;
        out.reserve(count());
        for_each([&](std::uint64_t i) { out.push_back(i); });
        return out;
    }

    bool is_subset_of(const Bitmap& other) const {
        check_same(other);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }
    bool intersects(const Bitmap& other) const {
        check_same(other);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & other.words_[w]) return true;
        return false;
    }

    Bitmap& operator|=(const Bitmap& o) {
        check_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    Bitmap& operator&=(const Bitmap& o) {
        check_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    Bitmap& operator^=(const Bitmap& o) {
        check_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    /// Set difference (this \ o).
    Bitmap& operator-=(const Bitmap& o) {
        check_same(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend Bitmap operator|(Bitmap a, const Bitmap& b) { return a |= b; }
    friend Bitmap operator&(Bitmap a, const Bitmap& b) { return a &= b; }
    friend Bitmap operator^(Bitmap a, const Bitmap& b) { return a ^= b; }
    friend Bitmap operator-(Bitmap a, const Bitmap& b) { return a -= b; }

    Bitmap complement() const {
        Bitmap out(size_);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
        out.mask_tail();
        return out;
    }

    bool operator==(const Bitmap& o) const = default;

    /// Hex literal of the bitmap value, little-endian bit i = element i.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        std::uint64_t nibbles = (size_ + 3) / 4;
        for (std::uint64_t k = 0; k < nibbles; ++k) {
            std::uint64_t pos = (nibbles - 1 - k) * 4;
            unsigned v = static_cast<unsigned>((words_[pos / kWordBits] >> (pos % kWordBits)) & 0xF);
            out.push_back(digits[v]);
        }
        return "0x" + (out.empty() ? "0" : out);
    }

private:
    void check_index(std::uint64_t i) const {
        if (i >= size_) throw std::out_of_range("Bitmap: index " + std::to_string(i) + " out of range");
    }
    void check_same(const Bitmap& o) const {
        if (size_ != o.size_) throw std::invalid_argument("Bitmap: universe sizes differ");
    }
    void mask_tail() {
        std::uint64_t tail = size_ % kWordBits;
        if (tail && !words_.empty()) words_.back() &= (word_t{1} << tail) - 1;
    }

    std::uint64_t size_ = 0;
    std::vector<word_t> words_;
};

}  // namespace sumsetlab
