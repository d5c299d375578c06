#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "limw/config.hpp"

namespace limw {

// Fixed-universe set of vertex ids backed by 64-bit words.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 0) throw DomainError("VertexSet: negative universe");
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t(1) << (v & 63);
    }

    void reset(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    // Smallest member strictly greater than v, or -1.
    int next(int v) const {
        if (v < 0) return first();
        std::size_t i = std::size_t(v) >> 6;
        if (i >= words_.size()) return -1;
        std::uint64_t w = words_[i] & ~((std::uint64_t(2) << (v & 63)) - 1);
        while (true) {
            if (w) return int(i * 64) + std::countr_zero(w);
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        checkUni(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        checkUni(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        checkUni(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool is_subset_of(const VertexSet& o) const {
        checkUni(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        checkUni(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    struct Hash {
        std::size_t operator()(const VertexSet& s) const {
            std::uint64_t h = 0x9e3779b97f4a7c15ull ^ std::uint64_t(s.n_);
            for (auto w : s.words_) {
                h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return std::size_t(h);
        }
    };

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw DomainError("VertexSet: vertex out of range");
    }
    void checkUni(const VertexSet& o) const {
        if (n_ != o.n_) throw DomainError("VertexSet: universe mismatch");
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace limw
