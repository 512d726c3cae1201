#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "cem/perm.hpp"

namespace cem {

/// Integer partition: weakly decreasing positive parts (possibly none).
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : p_(std::move(parts)) {
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] == 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < p_.size() && p_[i] < p_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<unsigned>& parts() const { return p_; }
    unsigned len() const { return static_cast<unsigned>(p_.size()); }
    unsigned largest() const { return p_.empty() ? 0 : p_[0]; }

    std::uint64_t sum() const {
        std::uint64_t s = 0;
        for (unsigned x : p_) s += x;
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

private:
    std::vector<unsigned> p_;
};

/// Conjugate of a weakly decreasing nonnegative sequence (zeros allowed; they
/// contribute nothing). Involutive on partitions.
inline Partition conjugate(const std::vector<unsigned>& mu) {
    for (std::size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] < mu[i + 1]) throw std::invalid_argument("conjugate: sequence must be weakly decreasing");
    unsigned largest = mu.empty() ? 0 : mu[0];
    std::vector<unsigned> conj;
    for (unsigned j = 1; j <= largest; ++j) {
        unsigned count = 0;
        for (unsigned x : mu)
            if (x >= j) ++count;
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

inline Partition conjugate(const Partition& lam) { return conjugate(lam.parts()); }

struct SortResult {
    Word wbar;          // the letters of w, weakly decreasing
    Permutation sigma;  // original positions in sorted order
};

/// Sorts the word weakly decreasing and records where each letter came from:
/// positions ordered by letter value descending, ties by original position
/// ascending. This is the unique fixed point of the adjacent-column swap
/// process, because columns with equal letters are never swapped.
inline SortResult stable_desc_sort(const Word& w) {
    const unsigned n = static_cast<unsigned>(w.size());
    std::vector<unsigned> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(), [&w](unsigned a, unsigned b) { return w[a] > w[b]; });
    Word wbar(n);
    std::vector<unsigned> sigma(n);
    for (unsigned j = 0; j < n; ++j) {
        wbar[j] = w[idx[j]];
        sigma[j] = idx[j] + 1;  // 1-based positions
    }
    return {std::move(wbar), Permutation(std::move(sigma))};
}

/// The literal adjacent-column swap process. Whenever the top row has a < b
/// in adjacent columns, both rows swap there. The observer (if any) sees the
/// two rows after every single swap. Used by the invariance property test;
/// stable_desc_sort computes the same fixed point directly.
inline SortResult desc_sort_by_swaps(
    const Word& w,
    const std::function<void(const Word&, const std::vector<unsigned>&)>& observer = {}) {
    const unsigned n = static_cast<unsigned>(w.size());
    Word top = w;
    std::vector<unsigned> bottom(n);
    std::iota(bottom.begin(), bottom.end(), 1u);
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (unsigned i = 0; i + 1 < n; ++i) {
            if (top[i] < top[i + 1]) {
                std::swap(top[i], top[i + 1]);
                std::swap(bottom[i], bottom[i + 1]);
                swapped = true;
                if (observer) observer(top, bottom);
            }
        }
    }
    return {std::move(top), Permutation(std::move(bottom))};
}

/// z_j = number of descents of sigma at positions >= j, with z_n = 0.
/// Weakly decreasing; z_1 = des(sigma) and sum(z) = maj(sigma).
inline std::vector<unsigned> z_vector(const Permutation& sigma) {
    const unsigned n = sigma.size();
    std::vector<unsigned> z(n, 0);
    if (n == 0) return z;
    for (unsigned j = n - 1; j-- > 0;) {
        z[j] = z[j + 1] + (sigma.value(j) > sigma.value(j + 1) ? 1u : 0u);
    }
    return z;
}

/// Full record of the word -> (permutation, partition) construction.
struct BijectionTrace {
    Word w;
    Word wbar;
    Permutation sigma;
    std::vector<unsigned> z;
    std::vector<unsigned> mu;  // wbar - z, weakly decreasing, zeros allowed
    Partition lambda;          // conjugate of mu
};

inline BijectionTrace word_to_pair_trace(const Word& w) {
    SortResult sorted = stable_desc_sort(w);
    std::vector<unsigned> z = z_vector(sorted.sigma);
    const unsigned n = static_cast<unsigned>(w.size());
    std::vector<unsigned> mu(n);
    for (unsigned j = 0; j < n; ++j) {
        if (sorted.wbar[j] < z[j])
            throw std::logic_error("word_to_pair: negative mu entry; construction breached");
        mu[j] = sorted.wbar[j] - z[j];
        if (j > 0 && mu[j - 1] < mu[j])
            throw std::logic_error("word_to_pair: mu not weakly decreasing; construction breached");
    }
    Partition lambda = conjugate(mu);
    return {w, std::move(sorted.wbar), std::move(sorted.sigma), std::move(z), std::move(mu),
            std::move(lambda)};
}

/// Forward direction of the correspondence. Guarantees P1-P3:
/// max(w) = des(sigma) + len(lambda); sum(w) = maj(sigma) + sum(lambda);
/// coinv(w) = inv(sigma). The largest part of lambda is at most n.
inline std::pair<Permutation, Partition> word_to_pair(const Word& w) {
    BijectionTrace tr = word_to_pair_trace(w);
    return {std::move(tr.sigma), std::move(tr.lambda)};
}

/// Inverse direction: rebuilds wbar = conjugate(lambda) + z(sigma) and
/// un-sorts it through sigma. Requires the largest part of lambda at most n.
inline Word pair_to_word(const Permutation& sigma, const Partition& lambda) {
    const unsigned n = sigma.size();
    if (lambda.largest() > n)
        throw std::domain_error("pair_to_word: largest part of lambda exceeds n");
    Partition muPart = conjugate(lambda);
    std::vector<unsigned> mu(muPart.parts());
    mu.resize(n, 0);  // pad on the right
    std::vector<unsigned> z = z_vector(sigma);
    Word wbar(n);
    for (unsigned j = 0; j < n; ++j) wbar[j] = mu[j] + z[j];
    // Well-definedness: wbar weakly decreasing, and strictly decreasing
    // wherever sigma ascends out of order, so the stable sort recovers sigma.
    for (unsigned j = 0; j + 1 < n; ++j) {
        if (wbar[j] < wbar[j + 1] || (wbar[j] == wbar[j + 1] && sigma.value(j) > sigma.value(j + 1)))
            throw std::logic_error("pair_to_word: inverse construction breached");
    }
    Word w(n);
    for (unsigned j = 0; j < n; ++j) w[sigma.value(j) - 1] = wbar[j];
    return w;
}

/// Round trip plus the three defining properties, for one word.
inline bool bijection_check_word(const Word& w) {
    BijectionTrace tr = word_to_pair_trace(w);
    if (maxw(w) != des(tr.sigma) + tr.lambda.len()) return false;
    if (sumt(w) != maj(tr.sigma) + tr.lambda.sum()) return false;
    if (coinv(w) != inv(tr.sigma)) return false;
    return pair_to_word(tr.sigma, tr.lambda) == w;
}

struct SweepResult {
    std::uint64_t words = 0;
    std::uint64_t failures = 0;
};

/// Checks every word of length n over the alphabet 0..max_letter.
inline SweepResult bijection_exhaustive_sweep(unsigned n, unsigned max_letter) {
    SweepResult res;
    Word w(n, 0);
    for (;;) {
        ++res.words;
        if (!bijection_check_word(w)) ++res.failures;
        unsigned pos = 0;
        while (pos < n && w[pos] == max_letter) w[pos++] = 0;
        if (pos == n) break;
        ++w[pos];
    }
    return res;
}

}  // namespace cem
