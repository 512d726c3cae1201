#pragma once

#include <cstdint>
#include <vector>

#include "cem/int_types.hpp"

namespace cem {

/// A permutation of 1..n in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<unsigned> values) : v_(std::move(values)) {
        std::vector<bool> seen(v_.size() + 1, false);
        for (unsigned x : v_) {
            if (x == 0 || x > v_.size() || seen[x])
                throw std::invalid_argument("Permutation: not a rearrangement of 1..n");
            seen[x] = true;
        }
    }

    static Permutation identity(unsigned n) {
        std::vector<unsigned> v(n);
        for (unsigned i = 0; i < n; ++i) v[i] = i + 1;
        return Permutation(std::move(v));
    }

    unsigned size() const { return static_cast<unsigned>(v_.size()); }
    unsigned value(unsigned i) const { return v_[i]; }  // 0-based position
    const std::vector<unsigned>& values() const { return v_; }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

private:
    std::vector<unsigned> v_;
};

inline unsigned des(const Permutation& s) {
    unsigned d = 0;
    for (unsigned i = 0; i + 1 < s.size(); ++i)
        if (s.value(i) > s.value(i + 1)) ++d;
    return d;
}

inline unsigned maj(const Permutation& s) {
    unsigned sum = 0;
    for (unsigned i = 0; i + 1 < s.size(); ++i)
        if (s.value(i) > s.value(i + 1)) sum += i + 1;
    return sum;
}

inline unsigned inv(const Permutation& s) {
    unsigned count = 0;
    for (unsigned i = 0; i < s.size(); ++i)
        for (unsigned j = i + 1; j < s.size(); ++j)
            if (s.value(i) > s.value(j)) ++count;
    return count;
}

/// A word over the nonnegative integers.
using Word = std::vector<unsigned>;

/// Non-inverted pairs i < j with x_i < x_j.
inline unsigned coinv(const Word& w) {
    unsigned count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] < w[j]) ++count;
    return count;
}

/// Inverted pairs i < j with x_i > x_j.
inline unsigned inv(const Word& w) {
    unsigned count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

inline std::uint64_t sumt(const Word& w) {
    std::uint64_t s = 0;
    for (unsigned x : w) s += x;
    return s;
}

/// Largest letter; 0 for the empty word.
inline unsigned maxw(const Word& w) {
    unsigned mx = 0;
    for (unsigned x : w) mx = std::max(mx, x);
    return mx;
}

}  // namespace cem
