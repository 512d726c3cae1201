#pragma once

#include <vector>

#include "cem/q_poly.hpp"
#include "cem/series.hpp"

namespace cem {

/// [n]_{q^s} = 1 + q^s + ... + q^{s(n-1)}; the empty sum 0 for n = 0.
inline QPoly q_int(unsigned n, unsigned step, unsigned m) {
    if (step == 0) throw std::invalid_argument("q_int: step must be positive");
    QPoly r(m);
    if (n == 0) return r;
    std::vector<CycElem> c((n - 1) * step + 1, CycElem(m));
    for (unsigned k = 0; k < n; ++k) c[k * step] = CycElem(m, 1);
    return QPoly(m, std::move(c));
}

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
inline QPoly q_factorial(unsigned n, unsigned m) {
    QPoly r = QPoly::one(m);
    for (unsigned k = 1; k <= n; ++k) r *= q_int(k, 1, m);
    return r;
}

/// (q^s; q^s)_n = product of (1 - q^{s j}) for j = 1..n.
inline QPoly qq_pochhammer(unsigned n, unsigned qstep, unsigned m) {
    QPoly r = QPoly::one(m);
    for (unsigned j = 1; j <= n; ++j)
        r *= QPoly::one(m) - QPoly::monomial(m, qstep * j);
    return r;
}

/// (t q^{a_qshift}; q^{qstep})_n as a series truncated at order L. It is a
/// polynomial in t of degree n, so order L >= n captures it exactly.
inline TruncSeries pochhammer_t(unsigned a_qshift, unsigned qstep, unsigned n, unsigned L,
                                unsigned m) {
    if (qstep == 0) throw std::invalid_argument("pochhammer_t: qstep must be positive");
    TruncSeries r = TruncSeries::one(m, L);
    for (unsigned j = 0; j < n; ++j) {
        TruncSeries factor = TruncSeries::one(m, L);
        if (L >= 1) factor.set_coeff(1, -QPoly::monomial(m, a_qshift + j * qstep));
        r *= factor;
    }
    return r;
}

/// Gaussian binomial [n over k]_q by exact division of (q;q)-factorials.
/// A nonzero remainder cannot happen mathematically; if it does it surfaces
/// as NotDivisibleError rather than a wrong polynomial.
inline QPoly q_binomial(unsigned n, unsigned k, unsigned m) {
    if (k > n) throw std::invalid_argument("q_binomial: k exceeds n");
    return div_exact(qq_pochhammer(n, 1, m), qq_pochhammer(k, 1, m) * qq_pochhammer(n - k, 1, m));
}

/// q-multinomial coefficient over the given parts.
inline QPoly q_multinomial(const std::vector<unsigned>& parts, unsigned m) {
    unsigned total = 0;
    QPoly denom = QPoly::one(m);
    for (unsigned p : parts) {
        total += p;
        denom *= qq_pochhammer(p, 1, m);
    }
    return div_exact(qq_pochhammer(total, 1, m), denom);
}

/// Truncated expansion of 1/(t; q^s)_n: the coefficient of t^k is the
/// Gaussian binomial [n+k-1 over k]_{q^s}. For n = 0 the series is 1.
inline TruncSeries inv_pochhammer_trunc(unsigned n, unsigned qstep, unsigned L, unsigned m) {
    if (qstep == 0) throw std::invalid_argument("inv_pochhammer_trunc: qstep must be positive");
    if (n == 0) return TruncSeries::one(m, L);
    TruncSeries r(m, L);
    for (unsigned k = 0; k <= L; ++k)
        r.set_coeff(k, q_binomial(n + k - 1, k, m).dilate(qstep));
    return r;
}

}  // namespace cem
