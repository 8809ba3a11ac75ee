#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlab {

// Subset of {0, ..., n-1} for a fixed small carrier, stored inline as a
// 128-bit mask. Carriers beyond 128 elements are rejected at construction;
// the largest carrier this project ever builds is 81 (2x2 matrices over a
// 3-element ring).
class ElemSet {
public:
    static constexpr int kMaxCarrier = 128;

    ElemSet() : n_(0), bits_{0, 0} {}

    explicit ElemSet(int n) : n_(n), bits_{0, 0} {
        if (n < 0 || n > kMaxCarrier)
            throw std::invalid_argument("ElemSet: carrier size out of range");
    }

    static ElemSet single(int n, int x) {
        ElemSet s(n);
        s.insert(x);
        return s;
    }

    static ElemSet full(int n) {
        ElemSet s(n);
        for (int i = 0; i < n; ++i) s.insert(i);
        return s;
    }

    static ElemSet of(int n, std::initializer_list<int> xs) {
        ElemSet s(n);
        for (int x : xs) s.insert(x);
        return s;
    }

    int carrier() const { return n_; }

    void insert(int x) {
        check(x);
        bits_[x >> 6] |= (uint64_t{1} << (x & 63));
    }

    void erase(int x) {
        check(x);
        bits_[x >> 6] &= ~(uint64_t{1} << (x & 63));
    }

    bool contains(int x) const {
        if (x < 0 || x >= n_) return false;
        return (bits_[x >> 6] >> (x & 63)) & 1;
    }

    bool empty() const { return bits_[0] == 0 && bits_[1] == 0; }

    int count() const {
        return __builtin_popcountll(bits_[0]) + __builtin_popcountll(bits_[1]);
    }

    ElemSet& operator|=(const ElemSet& o) {
        bits_[0] |= o.bits_[0];
        bits_[1] |= o.bits_[1];
        return *this;
    }

    ElemSet& operator&=(const ElemSet& o) {
        bits_[0] &= o.bits_[0];
        bits_[1] &= o.bits_[1];
        return *this;
    }

    friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
    friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

    // Elements of *this not in o.
    ElemSet minus(const ElemSet& o) const {
        ElemSet r(*this);
        r.bits_[0] &= ~o.bits_[0];
        r.bits_[1] &= ~o.bits_[1];
        return r;
    }

    bool operator==(const ElemSet& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    // Strict-weak order so ElemSet can key std::map / sort deterministically.
    bool operator<(const ElemSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (bits_[1] != o.bits_[1]) return bits_[1] < o.bits_[1];
        return bits_[0] < o.bits_[0];
    }

    bool subset_of(const ElemSet& o) const {
        return (bits_[0] & ~o.bits_[0]) == 0 && (bits_[1] & ~o.bits_[1]) == 0;
    }

    bool intersects(const ElemSet& o) const {
        return (bits_[0] & o.bits_[0]) != 0 || (bits_[1] & o.bits_[1]) != 0;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int w = 0; w < 2; ++w) {
            uint64_t m = bits_[w];
            while (m) {
                int b = __builtin_ctzll(m);
                out.push_back(w * 64 + b);
                m &= m - 1;
            }
        }
        return out;
    }

    size_t hash() const {
        // splitmix-style fold of the two words plus the carrier
        uint64_t h = bits_[0] * 0x9e3779b97f4a7c15ull;
        h ^= bits_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= static_cast<uint64_t>(n_) + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int x : elements()) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
        s += "}";
        return s;
    }

private:
    void check(int x) const {
        if (x < 0 || x >= n_)
            throw std::out_of_range("ElemSet: element out of carrier");
    }

    int n_;
    std::array<uint64_t, 2> bits_;
};

struct ElemSetHash {
    size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace hyperlab
