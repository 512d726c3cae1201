#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cem/cyclotomic.hpp"
#include "cem/int_types.hpp"

namespace cem {

/// Dense polynomial in q with coefficients in Z[xi_m], canonical form (no
/// trailing zero coefficients). All coefficients share the modulus m; an
/// identity that never mentions p simply lives in the m = 1 ring.
class QPoly {
public:
    explicit QPoly(unsigned m) : m_(m) {}

    QPoly(unsigned m, std::vector<CycElem> coeffs) : m_(m), c_(std::move(coeffs)) {
        for (const auto& e : c_)
            if (e.modulus() != m_) throw std::invalid_argument("QPoly: coefficient modulus mismatch");
        trim();
    }

    static QPoly one(unsigned m) { return constant(m, Int(1)); }

    static QPoly constant(unsigned m, Int v) {
        QPoly r(m);
        if (v != 0) r.c_.push_back(CycElem(m, std::move(v)));
        return r;
    }

    static QPoly constant(CycElem v) {
        QPoly r(v.modulus());
        if (!v.is_zero()) r.c_.push_back(std::move(v));
        return r;
    }

    static QPoly monomial(unsigned m, unsigned deg, CycElem coeff) {
        QPoly r(m);
        if (coeff.modulus() != m) throw std::invalid_argument("QPoly: coefficient modulus mismatch");
        if (!coeff.is_zero()) {
            r.c_.assign(deg + 1, CycElem(m));
            r.c_[deg] = std::move(coeff);
        }
        return r;
    }

    static QPoly monomial(unsigned m, unsigned deg, Int coeff = 1) {
        return monomial(m, deg, CycElem(m, std::move(coeff)));
    }

    unsigned modulus() const { return m_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<CycElem>& coeffs() const { return c_; }

    CycElem coeff(unsigned d) const { return d < c_.size() ? c_[d] : CycElem(m_); }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    QPoly& operator+=(const QPoly& o) {
        check_same_ring(o);
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), CycElem(m_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    QPoly& operator-=(const QPoly& o) {
        check_same_ring(o);
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), CycElem(m_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        a.check_same_ring(b);
        if (a.is_zero() || b.is_zero()) return QPoly(a.m_);
        QPoly r(a.m_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, CycElem(a.m_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }

    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    QPoly scaled(const CycElem& s) const {
        if (s.modulus() != m_) throw std::invalid_argument("QPoly: scalar modulus mismatch");
        QPoly r(m_);
        if (s.is_zero()) return r;
        r.c_ = c_;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }

    QPoly pow(unsigned e) const {
        QPoly base = *this;
        QPoly acc = one(m_);
        while (e > 0) {
            if (e & 1u) acc *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return acc;
    }

    /// Substitutes q -> q^s.
    QPoly dilate(unsigned s) const {
        if (s == 0) throw std::invalid_argument("QPoly::dilate: step must be positive");
        if (s == 1 || is_zero()) return *this;
        QPoly r(m_);
        r.c_.assign((c_.size() - 1) * s + 1, CycElem(m_));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * s] = c_[i];
        return r;
    }

    /// Evaluates at q = xi_m (the ring generator).
    CycElem eval_gen() const {
        const CycElem xi = CycElem::generator(m_);
        CycElem acc(m_);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= xi;
            acc += c_[i];
        }
        return acc;
    }

    /// Reinterprets as a plain integer polynomial (the caller decides the
    /// variable); requires every coefficient to be an integer element.
    IntPoly to_int_poly() const {
        std::vector<Int> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].int_value();
        return IntPoly(std::move(v));
    }

    /// Evaluates at q = 1.
    CycElem eval_one() const {
        CycElem acc(m_);
        for (const auto& v : c_) acc += v;
        return acc;
    }

    /// Canonical text, terms by ascending q-degree. Integer coefficients when
    /// m <= 2, bracketed coefficient vectors otherwise.
    std::string str() const;

private:
    friend QPoly div_exact(const QPoly&, const QPoly&);

    void check_same_ring(const QPoly& o) const {
        if (m_ != o.m_) throw std::invalid_argument("QPoly: modulus mismatch");
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    unsigned m_;
    std::vector<CycElem> c_;
};

namespace detail {

/// True when e is the integer +1 or -1 of its ring; sign returned through s.
inline bool is_unit_pm1(const CycElem& e, int& s) {
    if (!e.is_integer()) return false;
    if (e.int_value() == 1) { s = 1; return true; }
    if (e.int_value() == -1) { s = -1; return true; }
    return false;
}

}  // namespace detail

/// Exact polynomial division in q. The divisor's leading coefficient must be
/// a unit of the form +-1; a nonzero remainder raises NotDivisibleError so an
/// identity failure is never silently absorbed. Every ratio the verification
/// suites divide out ((q;q)-factorials, 1-q^2, cleared prefactors) has this
/// shape.
inline QPoly div_exact(const QPoly& a, const QPoly& b) {
    a.check_same_ring(b);
    if (b.is_zero()) throw std::invalid_argument("div_exact: division by zero polynomial");
    int sign = 0;
    if (!detail::is_unit_pm1(b.c_.back(), sign))
        throw std::invalid_argument("div_exact: divisor leading coefficient must be +-1");
    if (a.is_zero()) return QPoly(a.modulus());
    const std::size_t db = b.c_.size() - 1;
    if (a.c_.size() - 1 < db) throw NotDivisibleError("div_exact: divisor degree exceeds dividend");

    QPoly rem = a;
    QPoly quot(a.modulus());
    quot.c_.assign(a.c_.size() - db, CycElem(a.modulus()));
    while (rem.c_.size() > db) {
        const std::size_t k = rem.c_.size() - 1;
        CycElem lead = rem.c_[k];
        if (!lead.is_zero()) {
            if (sign < 0) lead = -lead;
            quot.c_[k - db] = lead;
            for (std::size_t i = 0; i <= db; ++i) rem.c_[k - db + i] -= lead * b.c_[i];
        }
        rem.c_.pop_back();
    }
    rem.trim();
    if (!rem.is_zero()) throw NotDivisibleError("div_exact: nonzero remainder");
    quot.trim();
    return quot;
}

inline std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (m_ <= 2) {
        for (std::size_t d = 0; d < c_.size(); ++d) {
            if (c_[d].is_zero()) continue;
            detail::append_signed_term(out, c_[d].int_value(),
                                       detail::power_str("q", static_cast<unsigned>(d)));
        }
    } else {
        for (std::size_t d = 0; d < c_.size(); ++d) {
            if (c_[d].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[d].str();
            const std::string vars = detail::power_str("q", static_cast<unsigned>(d));
            if (!vars.empty()) {
                out += "*";
                out += vars;
            }
        }
    }
    return out;
}

}  // namespace cem
