#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "cem/int_types.hpp"

namespace cem {

/// Dense univariate polynomial over Int in canonical form: the coefficient of
/// the highest stored degree is nonzero unless the polynomial is zero.
/// The indeterminate is anonymous; callers decide whether it is x, p, or q.
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int v) {
        IntPoly r;
        if (v != 0) r.c_.push_back(std::move(v));
        return r;
    }

    static IntPoly monomial(unsigned deg, Int coeff = 1) {
        IntPoly r;
        if (coeff != 0) {
            r.c_.assign(deg + 1, Int(0));
            r.c_[deg] = std::move(coeff);
        }
        return r;
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree, with -1 as the distinguished value for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return c_; }

    Int coeff(unsigned d) const { return d < c_.size() ? c_[d] : Int(0); }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly& operator+=(const IntPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        IntPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    /// Quotient and remainder under division by a monic divisor.
    static std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
        if (b.is_zero() || b.c_.back() != 1)
            throw std::invalid_argument("divmod_monic: divisor must be monic");
        const std::size_t db = b.c_.size() - 1;
        IntPoly rem = a;
        IntPoly quot;
        if (rem.c_.size() > db) quot.c_.assign(rem.c_.size() - db, Int(0));
        while (rem.c_.size() > db) {
            const std::size_t k = rem.c_.size() - 1;
            Int lead = rem.c_[k];
            if (lead != 0) {
                quot.c_[k - db] = lead;
                for (std::size_t i = 0; i <= db; ++i) rem.c_[k - db + i] -= lead * b.c_[i];
            }
            rem.c_.pop_back();
        }
        rem.trim();
        quot.trim();
        return {std::move(quot), std::move(rem)};
    }

    /// Exact division by a monic divisor; throws NotDivisibleError on a
    /// nonzero remainder.
    static IntPoly div_exact_monic(const IntPoly& a, const IntPoly& b) {
        auto [q, r] = divmod_monic(a, b);
        if (!r.is_zero()) throw NotDivisibleError("IntPoly: nonzero remainder in exact division");
        return q;
    }

    Int eval_one() const {
        Int s = 0;
        for (const auto& v : c_) s += v;
        return s;
    }

    /// Sign-aware rendering, terms by ascending degree, e.g. "1 - p + 2*p^3".
    std::string str(const std::string& var) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

namespace detail {

/// Appends one signed integer-coefficient term to a rendering in progress.
/// `vars` is the pre-built variable part ("q^2", "t*q", or "" for constants).
inline void append_signed_term(std::string& out, const Int& coeff, const std::string& vars) {
    const bool neg = coeff < 0;
    Int mag = neg ? Int(-coeff) : coeff;
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (vars.empty()) {
        out += mag.get_str();
    } else {
        if (mag != 1) {
            out += mag.get_str();
            out += "*";
        }
        out += vars;
    }
}

inline std::string power_str(const std::string& var, unsigned deg) {
    if (deg == 0) return {};
    if (deg == 1) return var;
    return var + "^" + std::to_string(deg);
}

}  // namespace detail

inline std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < c_.size(); ++d) {
        if (c_[d] == 0) continue;
        detail::append_signed_term(out, c_[d], detail::power_str(var, static_cast<unsigned>(d)));
    }
    return out;
}

}  // namespace cem
