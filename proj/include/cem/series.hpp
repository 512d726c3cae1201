#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cem/q_poly.hpp"

namespace cem {

/// Power series in t truncated at order L: exactly L+1 QPoly coefficients,
/// indexed by t-degree. Equality is defined only between series with the same
/// modulus and the same order; mixing them is a usage error, not "false".
class TruncSeries {
public:
    TruncSeries(unsigned m, unsigned order) : m_(m), order_(order), c_(order + 1, QPoly(m)) {}

    static TruncSeries one(unsigned m, unsigned order) {
        TruncSeries r(m, order);
        r.c_[0] = QPoly::one(m);
        return r;
    }

    /// All coefficients 1, i.e. the expansion of 1/(1-t).
    static TruncSeries all_ones(unsigned m, unsigned order) {
        TruncSeries r(m, order);
        for (auto& v : r.c_) v = QPoly::one(m);
        return r;
    }

    static TruncSeries from_coeffs(unsigned m, unsigned order, std::vector<QPoly> coeffs) {
        TruncSeries r(m, order);
        if (coeffs.size() > order + 1)
            throw std::invalid_argument("TruncSeries: more coefficients than order allows");
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].modulus() != m)
                throw std::invalid_argument("TruncSeries: coefficient modulus mismatch");
            r.c_[i] = std::move(coeffs[i]);
        }
        return r;
    }

    unsigned modulus() const { return m_; }
    unsigned order() const { return order_; }

    const QPoly& coeff(unsigned l) const {
        if (l > order_) throw std::invalid_argument("TruncSeries: index beyond order");
        return c_[l];
    }

    void set_coeff(unsigned l, QPoly v) {
        if (l > order_) throw std::invalid_argument("TruncSeries: index beyond order");
        if (v.modulus() != m_) throw std::invalid_argument("TruncSeries: coefficient modulus mismatch");
        c_[l] = std::move(v);
    }

    /// t-degree of the stored polynomial part; -1 when all coefficients vanish.
    int t_degree() const {
        for (std::size_t i = c_.size(); i-- > 0;)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    bool is_zero() const { return t_degree() < 0; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    TruncSeries& operator-=(const TruncSeries& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    /// Cauchy product, truncated at the common order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        TruncSeries r(a.m_, a.order_);
        for (unsigned i = 0; i <= a.order_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (unsigned j = 0; i + j <= b.order_; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    TruncSeries scaled(const QPoly& s) const {
        if (s.modulus() != m_) throw std::invalid_argument("TruncSeries: scalar modulus mismatch");
        TruncSeries r(m_, order_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    TruncSeries pow(unsigned e) const {
        TruncSeries base = *this;
        TruncSeries acc = one(m_, order_);
        while (e > 0) {
            if (e & 1u) acc *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return acc;
    }

    /// Substitutes q = 1 in every coefficient.
    TruncSeries specialize_q_one() const {
        TruncSeries r(m_, order_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = QPoly::constant(c_[i].eval_one());
        return r;
    }

    /// Sums the coefficients, i.e. evaluates at t = 1. Meaningful only when
    /// the series is an exact polynomial of degree <= order.
    QPoly eval_t_one() const {
        QPoly acc(m_);
        for (const auto& v : c_) acc += v;
        return acc;
    }

    /// Canonical flattened text: terms ordered by (t-degree, q-degree)
    /// ascending, coefficients rendered by the CycElem rules.
    std::string str() const;

private:
    void check_compatible(const TruncSeries& o) const {
        if (m_ != o.m_) throw std::invalid_argument("TruncSeries: modulus mismatch");
        if (order_ != o.order_) throw std::invalid_argument("TruncSeries: truncation order mismatch");
    }

    unsigned m_;
    unsigned order_;
    std::vector<QPoly> c_;
};

/// Hadamard product: coefficientwise product of the t-coefficients.
inline TruncSeries hadamard(const TruncSeries& f, const TruncSeries& g) {
    if (f.modulus() != g.modulus()) throw std::invalid_argument("hadamard: modulus mismatch");
    if (f.order() != g.order()) throw std::invalid_argument("hadamard: truncation order mismatch");
    TruncSeries r(f.modulus(), f.order());
    for (unsigned l = 0; l <= f.order(); ++l) r.set_coeff(l, f.coeff(l) * g.coeff(l));
    return r;
}

/// Exact division of polynomials in t (both given as truncated series that
/// hold their full polynomial content). The divisor's constant term must be
/// the unit 1 or -1. The quotient is computed by the ascending recurrence and
/// the full untruncated product is checked against the dividend; a mismatch
/// raises NotDivisibleError.
inline TruncSeries div_exact_in_t(const TruncSeries& a, const TruncSeries& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("div_exact_in_t: modulus mismatch");
    const unsigned m = a.modulus();
    const int da = a.t_degree();
    const int db = b.t_degree();
    if (db < 0) throw std::invalid_argument("div_exact_in_t: division by zero");
    int sign = 0;
    {
        const QPoly& b0 = b.coeff(0);
        if (b0.degree() != 0 || !detail::is_unit_pm1(b0.coeff(0), sign))
            throw std::invalid_argument("div_exact_in_t: divisor constant term must be +-1");
    }
    if (da < 0) return TruncSeries(m, a.order());
    if (da < db) throw NotDivisibleError("div_exact_in_t: divisor degree exceeds dividend");

    const unsigned dq = static_cast<unsigned>(da - db);
    std::vector<QPoly> q(dq + 1, QPoly(m));
    for (unsigned l = 0; l <= dq; ++l) {
        QPoly acc = l <= a.order() ? a.coeff(l) : QPoly(m);
        for (unsigned j = 1; j <= l && j <= static_cast<unsigned>(db); ++j)
            acc -= b.coeff(j) * q[l - j];
        q[l] = sign < 0 ? -acc : acc;
    }
    // Zero-remainder assertion via the full product.
    std::vector<QPoly> prod(static_cast<std::size_t>(da) + 1, QPoly(m));
    for (unsigned i = 0; i <= dq; ++i)
        for (unsigned j = 0; j <= static_cast<unsigned>(db); ++j) prod[i + j] += q[i] * b.coeff(j);
    for (unsigned l = 0; l <= static_cast<unsigned>(da); ++l)
        if (prod[l] != a.coeff(l)) throw NotDivisibleError("div_exact_in_t: nonzero remainder");

    return TruncSeries::from_coeffs(m, a.order(), std::move(q));
}

inline std::string TruncSeries::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t l = 0; l < c_.size(); ++l) {
        const QPoly& p = c_[l];
        if (p.is_zero()) continue;
        for (unsigned d = 0; d <= static_cast<unsigned>(p.degree()); ++d) {
            const CycElem cd = p.coeff(d);
            if (cd.is_zero()) continue;
            std::string vars = detail::power_str("t", static_cast<unsigned>(l));
            const std::string qpart = detail::power_str("q", d);
            if (!qpart.empty()) {
                if (!vars.empty()) vars += "*";
                vars += qpart;
            }
            if (m_ <= 2) {
                detail::append_signed_term(out, cd.int_value(), vars);
            } else {
                if (!out.empty()) out += " + ";
                out += cd.str();
                if (!vars.empty()) {
                    out += "*";
                    out += vars;
                }
            }
        }
    }
    return out;
}

}  // namespace cem
