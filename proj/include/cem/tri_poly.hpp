#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "cem/int_poly.hpp"
#include "cem/q_poly.hpp"
#include "cem/series.hpp"

namespace cem {

/// Exact integer polynomial in (t, q, p), stored sparsely. Keys are exponent
/// triples ordered lexicographically by (t-deg, q-deg, p-deg); only nonzero
/// coefficients are kept.
class TriPoly {
public:
    using Key = std::array<unsigned, 3>;  // {t, q, p}

    TriPoly() = default;

    static TriPoly constant(Int v) {
        TriPoly r;
        r.add_term(0, 0, 0, std::move(v));
        return r;
    }

    const std::map<Key, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    void add_term(unsigned t, unsigned q, unsigned p, const Int& c) {
        if (c == 0) return;
        Key k{t, q, p};
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coeff(unsigned t, unsigned q, unsigned p) const {
        auto it = terms_.find(Key{t, q, p});
        return it == terms_.end() ? Int(0) : it->second;
    }

    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

    TriPoly& operator+=(const TriPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], c);
        return *this;
    }

    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }

    friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
        TriPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ca * cb);
        return r;
    }

    TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }

    unsigned max_t_degree() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k[0]);
        return d;
    }

    /// Sum of all coefficients, i.e. the value at t = q = p = 1.
    Int coeff_sum() const {
        Int s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    TriPoly specialize_t_one() const { return collapse(0); }
    TriPoly specialize_q_one() const { return collapse(1); }
    TriPoly specialize_p_one() const { return collapse(2); }

    /// The slice of terms with the given t-degree, re-emitted at t-degree 0.
    TriPoly t_slice(unsigned t) const {
        TriPoly r;
        for (const auto& [k, c] : terms_)
            if (k[0] == t) r.add_term(0, k[1], k[2], c);
        return r;
    }

    /// Conversion to a q-polynomial; requires every t- and p-exponent to be 0.
    QPoly to_qpoly(unsigned m) const {
        QPoly r(m);
        for (const auto& [k, c] : terms_) {
            if (k[0] != 0 || k[2] != 0)
                throw std::invalid_argument("TriPoly::to_qpoly: nonzero t or p exponent");
            r += QPoly::monomial(m, k[1], c);
        }
        return r;
    }

    /// Conversion to a polynomial in p; requires every t- and q-exponent to be 0.
    IntPoly to_poly_in_p() const {
        IntPoly r;
        for (const auto& [k, c] : terms_) {
            if (k[0] != 0 || k[1] != 0)
                throw std::invalid_argument("TriPoly::to_poly_in_p: nonzero t or q exponent");
            r += IntPoly::monomial(k[2], c);
        }
        return r;
    }

    /// Canonical text: terms in (t, q, p) lexicographic order, "*" separators
    /// and caret powers, e.g. "1 + t*q*p".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            std::string vars;
            auto push = [&vars](const char* name, unsigned d) {
                const std::string part = detail::power_str(name, d);
                if (part.empty()) return;
                if (!vars.empty()) vars += "*";
                vars += part;
            };
            push("t", k[0]);
            push("q", k[1]);
            push("p", k[2]);
            detail::append_signed_term(out, c, vars);
        }
        return out;
    }

private:
    /// Sets the variable with the given key index to 1 by dropping that exponent.
    TriPoly collapse(unsigned idx) const {
        TriPoly r;
        for (const auto& [k, c] : terms_) {
            Key nk = k;
            nk[idx] = 0;
            r.add_term(nk[0], nk[1], nk[2], c);
        }
        return r;
    }

    std::map<Key, Int> terms_;
};

/// Result of substituting p = xi_m: a polynomial in t over QPoly, delivered
/// as a series truncated at L. `exact` records whether the whole polynomial
/// fit below the truncation order.
struct SpecializedSeries {
    TruncSeries series;
    bool exact;
};

/// Substitutes p = xi_m termwise: c * t^a q^b p^e contributes c * xi_m^e to
/// the (a, b) slot. At m = 1 this is exactly "drop p".
inline SpecializedSeries tri_specialize(const TriPoly& f, unsigned m, unsigned L) {
    TruncSeries out(m, L);
    bool exact = true;
    // Group by t-degree first so each coefficient is assembled once.
    std::map<unsigned, std::map<unsigned, CycElem>> slots;
    for (const auto& [k, c] : f.terms()) {
        if (k[0] > L) {
            exact = false;
            continue;
        }
        const CycElem xi_pow = CycElem::generator(m).pow(k[2]);
        auto& row = slots[k[0]];
        auto [it, inserted] = row.emplace(k[1], CycElem(m));
        it->second += CycElem(m, c) * xi_pow;
    }
    for (auto& [tdeg, row] : slots) {
        unsigned qmax = 0;
        for (const auto& [qdeg, v] : row) qmax = std::max(qmax, qdeg);
        std::vector<CycElem> coeffs(qmax + 1, CycElem(m));
        for (auto& [qdeg, v] : row) coeffs[qdeg] = std::move(v);
        out.set_coeff(tdeg, QPoly(m, std::move(coeffs)));
    }
    return {std::move(out), exact};
}

}  // namespace cem
