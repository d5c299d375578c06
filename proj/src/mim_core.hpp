#pragma once

// Branch-and-bound search for maximum induced matchings, shared by the
// public solver and the subset-DP oracle. Works on fixed-width bitmasks;
// W is the number of 64-bit words (vertex ids < 64*W).

#include <array>
#include <bit>
#include <cstdint>
#include <utility>

#include "limw/config.hpp"

namespace limw::detail {

template <int W>
struct SmallMask {
    std::array<std::uint64_t, W> w{};

    static SmallMask full(int n) {
        SmallMask m;
        for (int i = 0; i < W; ++i) {
            int lo = i * 64;
            if (n >= lo + 64)
                m.w[i] = ~std::uint64_t(0);
            else if (n > lo)
                m.w[i] = (std::uint64_t(1) << (n - lo)) - 1;
        }
        return m;
    }

    void set(int v) { w[std::size_t(v) >> 6] |= std::uint64_t(1) << (v & 63); }
    bool test(int v) const { return (w[std::size_t(v) >> 6] >> (v & 63)) & 1; }
    bool pair_in(int a, int b) const { return test(a) && test(b); }

    SmallMask& operator|=(const SmallMask& o) {
        for (int i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }
    void subtract(const SmallMask& o) {
        for (int i = 0; i < W; ++i) w[i] &= ~o.w[i];
    }
    int count() const {
        int c = 0;
        for (int i = 0; i < W; ++i) c += std::popcount(w[i]);
        return c;
    }
};

// Edges are branched on in the given array order. kill[i] is the union of
// the closed neighborhoods of edge i's endpoints in the searched graph, so
// subtracting it from the usable set enforces the induced condition.
template <int W>
struct MimSearch {
    const std::pair<int, int>* ends = nullptr;
    const SmallMask<W>* kill = nullptr;
    int n_edges = 0;
    std::uint64_t* budget = nullptr;
    int best = 0;

    void charge() {
        if (*budget == 0) throw ResourceError("mim: node budget exhausted");
        --*budget;
    }

    int greedy(SmallMask<W> usable) const {
        int c = 0;
        for (int i = 0; i < n_edges; ++i) {
            if (usable.pair_in(ends[i].first, ends[i].second)) {
                usable.subtract(kill[i]);
                ++c;
            }
        }
        return c;
    }

    void search(const SmallMask<W>& usable, int idx, int count) {
        charge();
        if (count > best) best = count;
        SmallMask<W> touch;
        int first_cand = -1;
        for (int i = idx; i < n_edges; ++i) {
            if (usable.pair_in(ends[i].first, ends[i].second)) {
                if (first_cand < 0) first_cand = i;
                touch.set(ends[i].first);
                touch.set(ends[i].second);
            }
        }
        if (first_cand < 0) return;
        int cap = touch.count() / 2;
        if (count + cap <= best) return;
        for (int i = first_cand; i < n_edges; ++i) {
            if (!usable.pair_in(ends[i].first, ends[i].second)) continue;
            SmallMask<W> next = usable;
            next.subtract(kill[i]);
            search(next, i + 1, count + 1);
            if (count + cap <= best) return;
        }
    }

    // Can `target` more edges be picked from positions >= idx?
    bool decide(const SmallMask<W>& usable, int idx, int count, int target) {
        if (count >= target) return true;
        charge();
        SmallMask<W> touch;
        int first_cand = -1;
        for (int i = idx; i < n_edges; ++i) {
            if (usable.pair_in(ends[i].first, ends[i].second)) {
                if (first_cand < 0) first_cand = i;
                touch.set(ends[i].first);
                touch.set(ends[i].second);
            }
        }
        if (first_cand < 0) return false;
        if (count + touch.count() / 2 < target) return false;
        for (int i = first_cand; i < n_edges; ++i) {
            if (!usable.pair_in(ends[i].first, ends[i].second)) continue;
            SmallMask<W> next = usable;
            next.subtract(kill[i]);
            if (decide(next, i + 1, count + 1, target)) return true;
        }
        return false;
    }
};

}  // namespace limw::detail
