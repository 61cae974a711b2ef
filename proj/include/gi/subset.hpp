#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "gi/errors.hpp"

namespace gi {

// A set of individual indices over a fixed universe [0, n), stored as a
// bitset. All binary operations require both operands to share the universe.
class Subset {
public:
    Subset() = default;

    explicit Subset(std::size_t universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    static Subset full(std::size_t universe) {
        Subset s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static Subset of(std::size_t universe, std::initializer_list<std::size_t> members) {
        Subset s(universe);
        for (std::size_t i : members) s.insert(i);
        return s;
    }

    static Subset from_indices(std::size_t universe, std::span<const std::size_t> members) {
        Subset s(universe);
        for (std::size_t i : members) s.insert(i);
        return s;
    }

    std::size_t universe() const { return n_; }

    bool contains(std::size_t i) const {
        check_index(i);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void insert(std::size_t i) {
        check_index(i);
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    void erase(std::size_t i) {
        check_index(i);
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const Subset& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const Subset& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    std::size_t intersection_count(const Subset& other) const {
        check_universe(other);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    Subset& operator|=(const Subset& other) {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    Subset& operator&=(const Subset& other) {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    // Set difference.
    Subset& operator-=(const Subset& other) {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
    friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

    Subset complement() const {
        Subset c(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.trim();
        return c;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Visits members in ascending order.
    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    bool operator==(const Subset& other) const = default;

private:
    void check_index(std::size_t i) const {
        if (i >= n_)
            throw InputError("individual index " + std::to_string(i) +
                             " out of range for universe of size " + std::to_string(n_));
    }

    void check_universe(const Subset& other) const {
        if (n_ != other.n_)
            throw InputError("subset universe mismatch: " + std::to_string(n_) +
                             " vs " + std::to_string(other.n_));
    }

    void trim() {
        if (n_ % 64 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gi
