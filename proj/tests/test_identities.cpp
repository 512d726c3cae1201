#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "cem/identities.hpp"

using namespace cem;

TEST_CASE("main identity: n = 2, m = 2 telescopes to 1/((1-t)(1-t q^2))") {
    VerificationReport r = verify_main(2, 2, 6);
    CHECK(r.pass);
    TruncSeries expect(2, 6);
    for (unsigned l = 0; l <= 6; ++l) expect.set_coeff(l, q_int(l + 1, 2, 2));
    CHECK(r.lhs == expect.str());
    CHECK(r.rhs == expect.str());
}

TEST_CASE("main identity: k = 0 boundary is a passing tautology") {
    for (unsigned m : {3u, 5u})
        for (unsigned n = 0; n < m; ++n) CHECK(verify_main(n, m, 8).pass);
}

TEST_CASE("main identity: brute force vs formula, n = 5, m = 2") {
    CHECK(verify_main(5, 2, 12).pass);
}

TEST_CASE("carlitz suite") {
    CHECK(verify_carlitz(0, 8).pass);
    CHECK(verify_carlitz(1, 8).pass);
    CHECK(verify_carlitz(6, 12).pass);
}

TEST_CASE("util suite") {
    VerificationReport r = verify_util(2, 1);
    CHECK(r.pass);
    CHECK(r.lhs == "1 + q + q*p + q^2");
    CHECK(r.rhs == "1 + q + q*p + q^2");
    for (unsigned n = 0; n <= 5; ++n) CHECK(verify_util(n, 0).pass);
    CHECK(verify_util(5, 3).pass);
}

TEST_CASE("wachs suite") {
    VerificationReport r = verify_wachs(1);
    CHECK(r.pass);
    CHECK(r.lhs == "1 - t*q");
    for (unsigned k = 0; k <= 4; ++k) CHECK(verify_wachs(k).pass);
}

TEST_CASE("gessel_simion suite") {
    VerificationReport r = verify_gessel_simion(3);
    CHECK(r.pass);
    // Both sides equal (1+q)(1-q^3) = 1 + q - q^3 - q^4.
    CHECK(r.lhs == "1 + q - q^3 - q^4");
    for (unsigned n = 0; n <= 8; ++n) CHECK(verify_gessel_simion(n).pass);
}

TEST_CASE("adin_gr suite") {
    CHECK(verify_adin_gr(2, 2).pass);
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned n = 0; n <= 6; ++n) CHECK(verify_adin_gr(n, m).pass);
}

TEST_CASE("df suites") {
    VerificationReport r = verify_df_even(1);
    CHECK(r.pass);
    CHECK(r.lhs == "1 - t");
    for (unsigned k = 0; k <= 3; ++k) {
        CHECK(verify_df_even(k).pass);
        CHECK(verify_df_odd(k).pass);
    }
}

TEST_CASE("case_i0 / case_I suites") {
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned k = 0; m * k <= 8; ++k) CHECK(verify_case_i0(m, k).pass);
    for (unsigned k = 0; k <= 2; ++k) {
        VerificationReport r = verify_case_I(k);
        CHECK(r.pass);
        CHECK(suite_name(r.suite) == "case_I");
    }
}

TEST_CASE("case_i1 / missing_odd suites") {
    for (unsigned m = 2; m <= 6; ++m)
        for (unsigned k = 0; m * k + 1 <= 8; ++k) CHECK(verify_case_i1(m, k, 12).pass);
    for (unsigned k = 0; k <= 3; ++k) CHECK(verify_missing_odd(k, 12).pass);
    CHECK_THROWS_AS(verify_case_i1(1, 1, 8), std::invalid_argument);
}

TEST_CASE("case_i2 suite") {
    for (unsigned m = 3; m <= 6; ++m)
        for (unsigned k = 0; m * k + 2 <= 8; ++k) CHECK(verify_case_i2(m, k, 12).pass);
    CHECK_THROWS_AS(verify_case_i2(2, 1, 8), std::invalid_argument);
}

TEST_CASE("the C_2 prefactor division is exact with the [l+1]_q factor") {
    // At m = 2 the bare prefactor is not polynomial, but the full coefficient
    // is; the l = 1 value collapses to 1 + q^2.
    QPoly c = c2_closed_coeff(1, 2);
    CHECK(c == QPoly::one(2) + QPoly::monomial(2u, 2u));
}

TEST_CASE("q1_triple and m4_eulerian suites") {
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned k = 0; m * k <= 8; ++k) CHECK(verify_q1_triple(m, k, 1).pass);
    for (unsigned m = 2; m <= 6; ++m)
        for (unsigned k = 0; m * k + 1 <= 8; ++k) CHECK(verify_q1_triple(m, k, 2).pass);
    CHECK_THROWS_AS(verify_q1_triple(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_q1_triple(4, 0, 4), std::invalid_argument);

    for (unsigned line = 1; line <= 2; ++line)
        for (unsigned k = 0; 4 * k + line - 1 <= 8; ++k)
            CHECK(verify_m4_eulerian(k, line).pass);
}

TEST_CASE("q1_triple line 3: printed prefactor disagrees for m >= 3, truth holds") {
    for (unsigned m = 3; m <= 6; ++m)
        for (unsigned k = 0; m * k + 2 <= 8; ++k) {
            VerificationReport truth = verify_q1_triple(m, k, 3, /*verbatim=*/false);
            CHECK(truth.pass);
            VerificationReport printed = verify_q1_triple(m, k, 3, /*verbatim=*/true);
            CHECK_FALSE(printed.pass);
            CHECK(is_informational(printed));
            CHECK(printed.first_mismatch.has_value());
        }
    for (unsigned k = 0; 4 * k + 2 <= 8; ++k) {
        CHECK(verify_m4_eulerian(k, 3, /*verbatim=*/false).pass);
        CHECK_FALSE(verify_m4_eulerian(k, 3, /*verbatim=*/true).pass);
    }
}

TEST_CASE("m4_mahonian suite: three verbatim lines pass") {
    for (unsigned n = 0; 4 * n <= 8; ++n) CHECK(verify_m4_mahonian(n, 0).pass);
    for (unsigned n = 0; 4 * n + 1 <= 8; ++n) CHECK(verify_m4_mahonian(n, 1).pass);
    for (unsigned n = 0; 4 * n + 3 <= 8; ++n) CHECK(verify_m4_mahonian(n, 3).pass);
}

TEST_CASE("m4_mahonian line 4n+2: printed formula disagrees, ground truth holds") {
    for (unsigned n = 0; 4 * n + 2 <= 8; ++n) {
        VerificationReport truth = verify_m4_mahonian(n, 2, /*verbatim=*/false);
        CHECK(truth.pass);
        VerificationReport printed = verify_m4_mahonian(n, 2, /*verbatim=*/true);
        CHECK_FALSE(printed.pass);
        CHECK(is_informational(printed));
        CHECK(printed.first_mismatch.has_value());
    }
}

TEST_CASE("qlucas suite") {
    VerificationReport r = verify_qlucas(2, {1, 1});
    CHECK(r.pass);
    CHECK(r.lhs == "0");

    for (unsigned m : {2u, 3u, 4u}) {
        for (unsigned a = 0; a <= 6; ++a)
            for (unsigned b = 0; a + b <= 6; ++b) CHECK(verify_qlucas(m, {a, b}).pass);
    }
    CHECK(verify_qlucas(3, {4, 2, 2}).pass);
    CHECK(verify_qlucas(4, {7, 1}).pass);
}

TEST_CASE("lemma_agr suite") {
    for (unsigned m = 2; m <= 8; ++m)
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j)
                if (i + j >= m) CHECK(verify_lemma_agr_part1(m, i, j).pass);
    for (unsigned m = 1; m <= 12; ++m) CHECK(verify_lemma_agr_part3(m).pass);
    CHECK_THROWS_AS(verify_lemma_agr_part1(4, 1, 1), std::invalid_argument);
}

TEST_CASE("mutations are caught with a correct first_mismatch") {
    Mutation mu;
    mu.t_deg = 2;
    mu.q_deg = 1;
    VerificationReport r = verify_carlitz(3, 8, &mu);
    CHECK_FALSE(r.pass);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->t_deg == 2);
    CHECK(r.first_mismatch->q_deg == 1);

    Mutation mq;
    mq.q_deg = 3;
    VerificationReport g = verify_gessel_simion(4, &mq);
    CHECK_FALSE(g.pass);
    REQUIRE(g.first_mismatch.has_value());
    CHECK(g.first_mismatch->t_deg == 0);
    CHECK(g.first_mismatch->q_deg == 3);

    Mutation mt;
    mt.t_deg = 0;
    mt.q_deg = 2;
    mt.p_deg = 1;
    VerificationReport u = verify_util(3, 2, &mt);
    CHECK_FALSE(u.pass);
    REQUIRE(u.first_mismatch.has_value());
    CHECK(u.first_mismatch->t_deg == 0);
    CHECK(u.first_mismatch->q_deg == 2);

    Mutation mc;
    VerificationReport q = verify_qlucas(3, {2, 2}, &mc);
    CHECK_FALSE(q.pass);
    REQUIRE(q.first_mismatch.has_value());
}

TEST_CASE("run_matrix basics") {
    MatrixConfig empty;
    empty.suites.clear();
    CHECK(run_matrix(empty).empty());

    MatrixConfig single;
    single.suites = {SuiteId::wachs};
    single.n_max = 2;
    CHECK(run_matrix(single).size() == 2);  // k = 0, 1

    MatrixConfig small;
    small.suites = {SuiteId::carlitz, SuiteId::gessel_simion};
    small.n_max = 4;
    small.trunc = 6;
    auto reports = run_matrix(small);
    CHECK(reports.size() == 10);
    CHECK(aggregate_pass(reports));
    // Sorted by (suite, params lexicographic).
    for (std::size_t i = 1; i < reports.size(); ++i) {
        CHECK((reports[i - 1].suite < reports[i].suite ||
               (reports[i - 1].suite == reports[i].suite &&
                reports[i - 1].params <= reports[i].params)));
    }
}

TEST_CASE("run_matrix guards the enumeration cap and dedups suites") {
    MatrixConfig over;
    over.n_max = 10;
    CHECK_THROWS_AS(run_matrix(over), ResourceCapError);

    MatrixConfig dup;
    dup.suites = {SuiteId::wachs, SuiteId::wachs};
    dup.n_max = 2;
    CHECK(run_matrix(dup).size() == 2);  // k = 0, 1 — once each

    MatrixConfig zero_m;
    zero_m.suites = {SuiteId::main};
    zero_m.m_set = {0, 2};
    CHECK_THROWS_AS(run_matrix(zero_m), std::invalid_argument);
}

TEST_CASE("run_matrix output is independent of the worker count") {
    MatrixConfig base;
    base.suites = {SuiteId::main, SuiteId::qlucas, SuiteId::m4_mahonian};
    base.n_max = 4;
    base.m_set = {1, 2, 3};
    base.trunc = 6;
    base.jobs = 1;
    MatrixConfig par = base;
    par.jobs = 4;
    auto r1 = run_matrix(base);
    auto r2 = run_matrix(par);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i)
        CHECK(report_json_line(r1[i]) == report_json_line(r2[i]));
}

TEST_CASE("reports serialize to round-trippable JSON") {
    VerificationReport r = verify_main(2, 2, 6);
    const std::string line = report_json_line(r);
    auto parsed = nlohmann::ordered_json::parse(line);
    CHECK(parsed.dump() == line);
    CHECK(parsed["suite"] == "main");
    CHECK(parsed["status"] == "pass");
    CHECK(parsed["params"]["n"] == 2);

    Mutation mu;
    VerificationReport bad = verify_carlitz(2, 6, &mu);
    const std::string bad_line = report_json_line(bad);
    auto bad_parsed = nlohmann::ordered_json::parse(bad_line);
    CHECK(bad_parsed.dump() == bad_line);
    CHECK(bad_parsed["status"] == "fail");
    CHECK(bad_parsed.contains("first_mismatch"));
}

TEST_CASE("suite names round trip") {
    for (SuiteId id : all_suites()) {
        auto back = suite_from_name(suite_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(suite_from_name("nosuch").has_value());
}
