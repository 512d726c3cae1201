#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cem/q_gadgets.hpp"
#include "cem/q_poly.hpp"
#include "cem/series.hpp"
#include "cem/tri_poly.hpp"

using namespace cem;

namespace {

QPoly qpoly(unsigned m, std::vector<long> cs) {
    std::vector<CycElem> v;
    for (long c : cs) v.emplace_back(m, c);
    return QPoly(m, std::move(v));
}

QPoly random_qpoly(std::mt19937& rng, unsigned m, int max_deg, int max_abs) {
    std::uniform_int_distribution<int> deg_d(0, max_deg);
    std::uniform_int_distribution<int> coef_d(-max_abs, max_abs);
    std::vector<CycElem> v;
    const int deg = deg_d(rng);
    for (int d = 0; d <= deg; ++d) {
        std::vector<Int> cs(cyc_degree(m));
        for (auto& c : cs) c = coef_d(rng);
        v.push_back(CycElem::from_residue(m, std::move(cs)));
    }
    return QPoly(m, std::move(v));
}

TruncSeries random_series(std::mt19937& rng, unsigned m, unsigned L) {
    TruncSeries s(m, L);
    for (unsigned l = 0; l <= L; ++l) s.set_coeff(l, random_qpoly(rng, m, 3, 4));
    return s;
}

Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

TEST_CASE("q_int examples") {
    CHECK(q_int(3, 1, 1) == qpoly(1, {1, 1, 1}));
    CHECK(q_int(2, 2, 1) == qpoly(1, {1, 0, 1}));
    CHECK(q_int(0, 1, 1).is_zero());
}

TEST_CASE("q_factorial examples") {
    CHECK(q_factorial(0, 1) == QPoly::one(1));
    CHECK(q_factorial(3, 1) == qpoly(1, {1, 2, 2, 1}));
    for (unsigned n = 0; n <= 8; ++n) {
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), n);
        CHECK(q_factorial(n, 1).eval_one() == CycElem(1, fact));
    }
}

TEST_CASE("pochhammer_t examples") {
    // (t;q)_2 = 1 - t(1+q) + t^2 q.
    TruncSeries p2 = pochhammer_t(0, 1, 2, 3, 1);
    CHECK(p2.coeff(0) == QPoly::one(1));
    CHECK(p2.coeff(1) == -qpoly(1, {1, 1}));
    CHECK(p2.coeff(2) == qpoly(1, {0, 1}));
    CHECK(p2.coeff(3).is_zero());

    // (tq;q^2)_1 = 1 - tq.
    TruncSeries w = pochhammer_t(1, 2, 1, 2, 1);
    CHECK(w.coeff(0) == QPoly::one(1));
    CHECK(w.coeff(1) == -QPoly::monomial(1u, 1u));
    CHECK(w.coeff(2).is_zero());

    CHECK(pochhammer_t(0, 1, 0, 4, 1) == TruncSeries::one(1, 4));
}

TEST_CASE("inv_pochhammer_trunc examples") {
    TruncSeries s = inv_pochhammer_trunc(2, 1, 2, 1);
    CHECK(s.coeff(0) == QPoly::one(1));
    CHECK(s.coeff(1) == qpoly(1, {1, 1}));
    CHECK(s.coeff(2) == qpoly(1, {1, 1, 1}));

    CHECK(inv_pochhammer_trunc(1, 1, 2, 1) == TruncSeries::all_ones(1, 2));
    CHECK(inv_pochhammer_trunc(3, 1, 4, 1).coeff(1) == q_int(3, 1, 1));
    CHECK(inv_pochhammer_trunc(0, 1, 3, 1) == TruncSeries::one(1, 3));
}

TEST_CASE("pochhammer inverse pairs up to order 12") {
    const unsigned L = 12;
    for (unsigned s = 1; s <= 4; ++s)
        for (unsigned n = 0; n <= 8; ++n) {
            TruncSeries prod = pochhammer_t(0, s, n, L, 1) * inv_pochhammer_trunc(n, s, L, 1);
            CHECK(prod == TruncSeries::one(1, L));
        }
    // Same in a ring where xi is nontrivial.
    for (unsigned n = 0; n <= 3; ++n) {
        TruncSeries prod = pochhammer_t(0, 1, n, 8, 4) * inv_pochhammer_trunc(n, 1, 8, 4);
        CHECK(prod == TruncSeries::one(4, 8));
    }
}

TEST_CASE("q_binomial and q_multinomial examples") {
    CHECK(q_binomial(4, 2, 1) == qpoly(1, {1, 1, 2, 1, 1}));
    CHECK(q_multinomial({1, 1}, 1) == qpoly(1, {1, 1}));
    for (unsigned n = 0; n <= 6; ++n) CHECK(q_binomial(n, 0, 1) == QPoly::one(1));
    CHECK_THROWS_AS(q_binomial(2, 3, 1), std::invalid_argument);
}

TEST_CASE("q-Pascal recurrence up to n = 12") {
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            QPoly lhs = q_binomial(n, k, 1);
            QPoly rhs = q_binomial(n - 1, k - 1, 1);
            if (k <= n - 1) rhs += QPoly::monomial(1u, k) * q_binomial(n - 1, k, 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("q_binomial at q = 1 is the binomial coefficient") {
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k, 1).eval_one() == CycElem(1, binomial(n, k)));
}

TEST_CASE("q_multinomial equals iterated q_binomials over prefix sums") {
    // All part-tuples with sum <= 8 and length <= 4.
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned used) {
        if (!cur.empty()) tuples.push_back(cur);
        if (cur.size() == 4) return;
        for (unsigned v = 0; used + v <= 8; ++v) {
            cur.push_back(v);
            rec(used + v);
            cur.pop_back();
        }
    };
    rec(0);
    for (const auto& parts : tuples) {
        QPoly expect = QPoly::one(1);
        unsigned prefix = 0;
        for (unsigned p : parts) {
            prefix += p;
            expect *= q_binomial(prefix, p, 1);
        }
        CHECK(q_multinomial(parts, 1) == expect);
    }
}

TEST_CASE("hadamard examples") {
    std::mt19937 rng(424242);
    TruncSeries f = random_series(rng, 1, 6);
    CHECK(hadamard(f, TruncSeries::all_ones(1, 6)) == f);

    TruncSeries a(1, 1), b(1, 1);
    a.set_coeff(0, QPoly::constant(1u, 1));
    a.set_coeff(1, QPoly::constant(1u, 2));
    b.set_coeff(0, QPoly::constant(1u, 3));
    b.set_coeff(1, QPoly::constant(1u, 5));
    TruncSeries expect(1, 1);
    expect.set_coeff(0, QPoly::constant(1u, 3));
    expect.set_coeff(1, QPoly::constant(1u, 10));
    CHECK(hadamard(a, b) == expect);

    CHECK(hadamard(TruncSeries(1, 6), f) == TruncSeries(1, 6));
    CHECK_THROWS_AS(hadamard(TruncSeries(1, 5), TruncSeries(1, 6)), std::invalid_argument);
    CHECK_THROWS_AS(hadamard(TruncSeries(1, 5), TruncSeries(2, 5)), std::invalid_argument);
}

TEST_CASE("hadamard is commutative, associative, and bilinear") {
    std::mt19937 rng(777);
    for (unsigned m : {1u, 3u}) {
        for (int rep = 0; rep < 8; ++rep) {
            TruncSeries f = random_series(rng, m, 8);
            TruncSeries g = random_series(rng, m, 8);
            TruncSeries h = random_series(rng, m, 8);
            CHECK(hadamard(f, g) == hadamard(g, f));
            CHECK(hadamard(hadamard(f, g), h) == hadamard(f, hadamard(g, h)));
            CHECK(hadamard(f + g, h) == hadamard(f, h) + hadamard(g, h));
            QPoly c = random_qpoly(rng, m, 2, 3);
            CHECK(hadamard(f.scaled(c), g) == hadamard(f, g).scaled(c));
        }
    }
}

TEST_CASE("exact division in q") {
    const QPoly num = QPoly::one(1) - QPoly::monomial(1u, 4u);
    const QPoly den = QPoly::one(1) - QPoly::monomial(1u, 2u);
    CHECK(div_exact(num, den) == qpoly(1, {1, 0, 1}));

    CHECK_THROWS_AS(div_exact(qpoly(1, {1, 0, 1}), qpoly(1, {1, 1})), NotDivisibleError);
    CHECK_THROWS_AS(div_exact(num, QPoly(1)), std::invalid_argument);
    CHECK_THROWS_AS(div_exact(num, qpoly(1, {1, 2})), std::invalid_argument);

    std::mt19937 rng(31415);
    for (int rep = 0; rep < 20; ++rep) {
        QPoly a = random_qpoly(rng, 3, 5, 4);
        QPoly b = qq_pochhammer(1 + rep % 3, 1, 3);
        CHECK(div_exact(a * b, b) == a);
    }
}

TEST_CASE("exact division in t") {
    // ((t;q)_3) / ((t;q)_1) = (1-tq)(1-tq^2).
    TruncSeries num = pochhammer_t(0, 1, 3, 5, 1);
    TruncSeries den = pochhammer_t(0, 1, 1, 5, 1);
    TruncSeries expect = pochhammer_t(1, 1, 2, 5, 1);
    CHECK(div_exact_in_t(num, den) == expect);

    // Inverse-pair sanity: series_mul of the quotient with den gives num back.
    TruncSeries back = div_exact_in_t(num, den) * den;
    CHECK(back == num);

    CHECK_THROWS_AS(div_exact_in_t(den, num), NotDivisibleError);
    TruncSeries bad(1, 5);
    CHECK_THROWS_AS(div_exact_in_t(num, bad), std::invalid_argument);
}

TEST_CASE("series multiplication respects inverses") {
    TruncSeries prod = inv_pochhammer_trunc(2, 1, 12, 1) * pochhammer_t(0, 1, 2, 12, 1);
    CHECK(prod == TruncSeries::one(1, 12));
}

TEST_CASE("tri_specialize examples") {
    TriPoly f;
    f.add_term(0, 0, 0, 1);
    f.add_term(1, 1, 1, 1);  // 1 + t q p

    auto at2 = tri_specialize(f, 2, 4);
    CHECK(at2.exact);
    CHECK(at2.series.coeff(0) == QPoly::one(2));
    CHECK(at2.series.coeff(1) == -QPoly::monomial(2u, 1u));

    auto at1 = tri_specialize(f, 1, 4);
    CHECK(at1.series.coeff(1) == QPoly::monomial(1u, 1u));

    // Truncation below the t-degree is reported.
    TriPoly g;
    g.add_term(3, 0, 0, 1);
    CHECK_FALSE(tri_specialize(g, 1, 2).exact);
}

TEST_CASE("canonical rendering") {
    CHECK(qpoly(1, {1, -1}).str() == "1 - q");
    CHECK(qpoly(1, {0, 2, 0, 1}).str() == "2*q + q^3");
    CHECK(QPoly(1).str() == "0");
    CHECK(QPoly::constant(CycElem::generator(4)).str() == "[0,1]");
    CHECK((QPoly::one(4) + QPoly::monomial(4, 1, CycElem::generator(4))).str() ==
          "[1,0] + [0,1]*q");

    TruncSeries s(1, 3);
    s.set_coeff(0, QPoly::one(1));
    s.set_coeff(2, -qpoly(1, {0, 0, 0, 1}));
    CHECK(s.str() == "1 - t^2*q^3");

    TriPoly f;
    f.add_term(0, 0, 0, 1);
    f.add_term(1, 1, 1, 1);
    CHECK(f.str() == "1 + t*q*p");
    TriPoly g;
    g.add_term(0, 0, 0, 1);
    g.add_term(2, 3, 0, -1);
    CHECK(g.str() == "1 - t^2*q^3");
}

TEST_CASE("series equality demands matching shape") {
    CHECK_THROWS_AS(TruncSeries(1, 5) == TruncSeries(1, 6), std::invalid_argument);
    CHECK_THROWS_AS(TruncSeries(1, 5) == TruncSeries(2, 5), std::invalid_argument);
}
