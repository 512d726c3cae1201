#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cem/int_poly.hpp"
#include "cem/int_types.hpp"

namespace cem {

/// Cyclotomic polynomial of order m, computed by exact division:
/// x^m - 1 divided by the product of all lower-order cyclotomic polynomials
/// over the proper divisors of m. Memoized; the returned reference is stable.
inline const IntPoly& cyclotomic_poly(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_poly: order must be positive");
    // Node references in the shared map are stable, so each thread may keep
    // lock-free pointers to entries it has already seen.
    thread_local std::map<unsigned, const IntPoly*> seen;
    if (auto it = seen.find(m); it != seen.end()) return *it->second;

    static std::map<unsigned, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) {
        seen.emplace(m, &it->second);
        return it->second;
    }
    // Compute bottom-up over the divisors so nothing re-enters the lock.
    for (unsigned v = 1; v <= m; ++v) {
        if (m % v != 0 || cache.count(v)) continue;
        IntPoly divisor_product = IntPoly::constant(1);
        for (unsigned d = 1; d < v; ++d)
            if (v % d == 0) divisor_product *= cache.at(d);
        IntPoly xv_minus_1 = IntPoly::monomial(v) - IntPoly::constant(1);
        cache.emplace(v, IntPoly::div_exact_monic(xv_minus_1, divisor_product));
    }
    const IntPoly& result = cache.at(m);
    seen.emplace(m, &result);
    return result;
}

/// deg Phi_m, i.e. the Euler totient of m.
inline unsigned cyc_degree(unsigned m) {
    return static_cast<unsigned>(cyclotomic_poly(m).degree());
}

/// An element of Z[xi_m] represented as the canonical residue mod Phi_m(x):
/// a dense integer vector of length exactly deg Phi_m over the basis
/// 1, z, ..., z^{phi(m)-1}. For m in {1,2} the basis has length 1 and
/// elements behave as plain integers through the same code path.
class CycElem {
public:
    explicit CycElem(unsigned m) : m_(m), c_(cyc_degree(m), Int(0)) {}

    CycElem(unsigned m, Int constant) : CycElem(m) { c_[0] = std::move(constant); }

    /// The class of x, i.e. xi_m itself (reduced: 1 when m=1, -1 when m=2).
    static CycElem generator(unsigned m);

    static CycElem from_residue(unsigned m, std::vector<Int> residue) {
        CycElem r(m);
        if (residue.size() > r.c_.size())
            throw std::invalid_argument("CycElem: residue longer than deg Phi_m");
        for (std::size_t i = 0; i < residue.size(); ++i) r.c_[i] = std::move(residue[i]);
        return r;
    }

    unsigned modulus() const { return m_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_) if (v != 0) return false;
        return true;
    }

    /// True when the element lies in Z, i.e. only the basis-1 slot is nonzero.
    bool is_integer() const {
        for (std::size_t i = 1; i < c_.size(); ++i) if (c_[i] != 0) return false;
        return true;
    }

    const Int& int_value() const {
        if (!is_integer()) throw std::invalid_argument("CycElem: not an integer element");
        return c_[0];
    }

    friend bool operator==(const CycElem& a, const CycElem& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

    CycElem& operator+=(const CycElem& o) {
        check_same_ring(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    CycElem& operator-=(const CycElem& o) {
        check_same_ring(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
    friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }

    CycElem operator-() const {
        CycElem r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend CycElem operator*(const CycElem& a, const CycElem& b);

    CycElem& operator*=(const CycElem& o) { return *this = *this * o; }

    CycElem pow(unsigned e) const {
        CycElem base = *this;
        CycElem acc(m_, 1);
        while (e > 0) {
            if (e & 1u) acc *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return acc;
    }

    /// Canonical text: a decimal integer when m <= 2, otherwise the bracketed
    /// coefficient vector "[c0,c1,...]" over the power basis.
    std::string str() const {
        if (m_ <= 2) return c_[0].get_str();
        std::string out = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ",";
            out += c_[i].get_str();
        }
        out += "]";
        return out;
    }

private:
    void check_same_ring(const CycElem& o) const {
        if (m_ != o.m_) throw std::invalid_argument("CycElem: modulus mismatch");
    }

    unsigned m_;
    std::vector<Int> c_;
};

/// Canonical residue of an integer polynomial mod Phi_m. Reduction is a ring
/// homomorphism: it commutes with addition and multiplication.
inline CycElem cyc_reduce(const IntPoly& p, unsigned m) {
    const IntPoly& phi = cyclotomic_poly(m);
    const std::size_t d = static_cast<std::size_t>(phi.degree());
    std::vector<Int> r = p.coeffs();
    while (r.size() > d) {
        const std::size_t k = r.size() - 1;
        Int lead = r[k];
        if (lead != 0) {
            for (std::size_t i = 0; i <= d; ++i) r[k - d + i] -= lead * phi.coeffs()[i];
        }
        r.pop_back();
    }
    return CycElem::from_residue(m, std::move(r));
}

inline CycElem CycElem::generator(unsigned m) {
    return cyc_reduce(IntPoly::monomial(1), m);
}

inline CycElem operator*(const CycElem& a, const CycElem& b) {
    a.check_same_ring(b);
    const std::size_t d = a.c_.size();
    std::vector<Int> prod(2 * d - 1, Int(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return cyc_reduce(IntPoly(std::move(prod)), a.m_);
}

/// Evaluates f at xi_m by Horner's rule inside the quotient ring. Two integer
/// polynomials agree mod Phi_m exactly when their evaluations here are equal.
inline CycElem specialize_p(const IntPoly& f, unsigned m) {
    const CycElem xi = CycElem::generator(m);
    CycElem acc(m);
    for (int d = f.degree(); d >= 0; --d) {
        acc *= xi;
        acc += CycElem(m, f.coeff(static_cast<unsigned>(d)));
    }
    return acc;
}

}  // namespace cem
