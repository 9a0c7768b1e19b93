#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccg {

// Subset of the vertices 0..n-1 of a host graph, stored as a bit vector.
// All binary operations require both operands to share the same universe.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), w_(word_count(universe), 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int v) const {
        check(v);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check(v);
        w_[v >> 6] |= uint64_t(1) << (v & 63);
    }

    void reset(int v) {
        check(v);
        w_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // set difference: removes every member of o
    VertexSet& and_not(const VertexSet& o) {
        check_same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    bool operator<(const VertexSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return w_ < o.w_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                int v = int(i * 64) + std::countr_zero(w);
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // "{0,1,2}" with members ascending
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        });
        s += '}';
        return s;
    }

private:
    static size_t word_count(int n) { return size_t(n + 63) / 64; }

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " out of range");
    }

    void check_same(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace ccg
