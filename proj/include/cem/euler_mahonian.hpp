#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "cem/perm.hpp"
#include "cem/q_gadgets.hpp"
#include "cem/tri_poly.hpp"

namespace cem {

struct EnumOptions {
    bool allow_n10 = false;  // n = 10 is permitted only behind this flag
    unsigned jobs = 1;       // worker threads for the enumeration blocks
};

namespace detail {

/// Accumulates t^des q^maj p^inv over all permutations of `n` letters whose
/// first letter is `first`. The remaining letters are taken in every order.
inline TriPoly em_block(unsigned n, unsigned first) {
    TriPoly acc;
    std::vector<unsigned> rest;
    for (unsigned v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
    std::vector<unsigned> full(n);
    full[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), full.begin() + 1);
        unsigned d = 0, mj = 0, iv = 0;
        for (unsigned i = 0; i + 1 < n; ++i) {
            if (full[i] > full[i + 1]) {
                ++d;
                mj += i + 1;
            }
            for (unsigned j = i + 1; j < n; ++j)
                if (full[i] > full[j]) ++iv;
        }
        acc.add_term(d, mj, iv, 1);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return acc;
}

}  // namespace detail

/// A_n(t,q,p): the generating polynomial of the symmetric group by
/// (des, maj, inv), computed by brute-force enumeration of all n!
/// permutations. Blocks are partitioned on the first letter and merged in
/// block order, so the result is independent of the worker count.
inline TriPoly euler_mahonian(unsigned n, const EnumOptions& opts = {}) {
    if (n > 10 || (n == 10 && !opts.allow_n10))
        throw ResourceCapError("euler_mahonian: n exceeds the enumeration cap (9; 10 behind a flag)");
    if (n == 0) return TriPoly::constant(1);

    std::vector<TriPoly> blocks(n);
    const unsigned jobs = std::max(1u, std::min(opts.jobs, n));
    if (jobs == 1) {
        for (unsigned first = 1; first <= n; ++first)
            blocks[first - 1] = detail::em_block(n, first);
    } else {
        std::vector<std::thread> pool;
        std::atomic<unsigned> next{1};
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (unsigned first = next.fetch_add(1); first <= n; first = next.fetch_add(1))
                    blocks[first - 1] = detail::em_block(n, first);
            });
        for (auto& th : pool) th.join();
    }
    TriPoly acc;
    for (const auto& b : blocks) acc += b;
    return acc;
}

/// Memoized variant; the returned reference is stable for the process
/// lifetime. All identity suites share one enumeration per n.
inline const TriPoly& euler_mahonian_cached(unsigned n, const EnumOptions& opts = {}) {
    static std::map<unsigned, TriPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, euler_mahonian(n, opts)).first;
    return it->second;
}

/// Right side of Carlitz's identity with q replaced by q^qstep:
/// the coefficient of t^l is ([l+1]_{q^qstep})^n.
inline TruncSeries carlitz_rhs(unsigned n, unsigned qstep, unsigned L, unsigned m) {
    TruncSeries r(m, L);
    for (unsigned l = 0; l <= L; ++l) r.set_coeff(l, q_int(l + 1, qstep, m).pow(n));
    return r;
}

/// The coefficient stream C_i(l; q, xi_m) of A_i(t,q,xi_m)/(t;q)_{i+1},
/// delivered as a truncated series.
inline TruncSeries c_stream(unsigned i, unsigned m, unsigned L) {
    if (i >= m) throw std::invalid_argument("c_stream: requires i <= m-1");
    return tri_specialize(euler_mahonian_cached(i), m, L).series *
           inv_pochhammer_trunc(i + 1, 1, L, m);
}

/// Number of weak compositions of n into l+1 parts, as an Int.
inline Int composition_count(unsigned n, unsigned l) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), n + l, l);
    return c;
}

/// Coefficient of t^l in A_n(t,q,p)/(t;q)_{n+1} as an exact polynomial in
/// (q, p): the sum over weak compositions n_0 + ... + n_l = n of
/// q^{n_1 + 2 n_2 + ... + l n_l} times the p-multinomial of the parts.
inline TriPoly util_rhs(unsigned n, unsigned l, const Int& cap = Int(1000000)) {
    if (composition_count(n, l) > cap)
        throw ResourceCapError("util_rhs: composition count exceeds cap");
    TriPoly out;
    std::vector<unsigned> parts(l + 1, 0);
    // Iterative enumeration of weak compositions.
    parts[0] = n;
    for (;;) {
        unsigned qexp = 0;
        for (unsigned j = 1; j <= l; ++j) qexp += j * parts[j];
        const IntPoly multinomial_p = q_multinomial(parts, 1).to_int_poly();
        for (int d = multinomial_p.degree(); d >= 0; --d)
            out.add_term(0, qexp, static_cast<unsigned>(d), multinomial_p.coeff(static_cast<unsigned>(d)));
        // Next composition in colex order: move one unit from the first
        // nonzero slot into the next slot, resetting earlier mass to slot 0.
        unsigned j = 0;
        while (j <= l && parts[j] == 0) ++j;
        if (j >= l) break;
        const unsigned moved = parts[j];
        parts[j] = 0;
        parts[0] = moved - 1;
        ++parts[j + 1];
    }
    return out;
}

}  // namespace cem
