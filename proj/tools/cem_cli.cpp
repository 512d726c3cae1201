// Command-line front end: compute and print the exact polynomials, run the
// identity verification matrix, and trace the word <-> (permutation,
// partition) correspondence.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cem/cem.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Writes the collected output to stdout and, when requested, the same bytes
/// to a file.
int emit(const std::string& text, const std::string& out_path, int code) {
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return kExitUsage;
        }
        f << text;
    }
    return code;
}

unsigned default_trunc(bool& ok) {
    ok = true;
    const char* s = std::getenv("CEM_TRUNC");
    if (!s) return 12;
    try {
        const long v = std::stol(s);
        if (v < 0) throw std::out_of_range("negative");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        ok = false;
        return 12;
    }
}

std::string join_row(const std::vector<unsigned>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string partition_str(const cem::Partition& lam) {
    std::string out = "(";
    for (std::size_t i = 0; i < lam.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(lam.parts()[i]);
    }
    out += ")";
    return out;
}

int run_poly(unsigned n, bool has_m, unsigned m, bool t1, bool q1, bool allow_n10, unsigned jobs,
             const std::string& out_path) {
    cem::EnumOptions opts;
    opts.allow_n10 = allow_n10;
    opts.jobs = jobs;
    const cem::TriPoly& A = cem::euler_mahonian_cached(n, opts);
    std::string text;
    if (!has_m) {
        cem::TriPoly result = A;
        if (t1) result = result.specialize_t_one();
        if (q1) result = result.specialize_q_one();
        text = result.str() + "\n";
    } else {
        auto sp = cem::tri_specialize(A, m, A.max_t_degree());
        cem::TruncSeries series = std::move(sp.series);
        if (q1) series = series.specialize_q_one();
        if (t1) {
            text = series.eval_t_one().str() + "\n";
        } else {
            text = series.str() + "\n";
        }
    }
    return emit(text, out_path, kExitOk);
}

int run_verify(const std::vector<std::string>& suite_names, unsigned n_max,
               const std::vector<unsigned>& m_set, unsigned trunc, const std::string& format,
               unsigned jobs, bool allow_n10, const std::string& out_path) {
    cem::MatrixConfig cfg;
    cfg.suites.clear();
    bool all = false;
    for (const auto& name : suite_names) {
        if (name == "all") {
            all = true;
            continue;
        }
        auto id = cem::suite_from_name(name);
        if (!id) {
            std::cerr << "unknown suite: " << name << "\n";
            return kExitUsage;
        }
        cfg.suites.push_back(*id);
    }
    if (all) cfg.suites = cem::all_suites();
    if (cfg.suites.empty()) {
        std::cerr << "no suites selected\n";
        return kExitUsage;
    }
    cfg.n_max = n_max;
    cfg.m_set = m_set;
    cfg.trunc = trunc;
    cfg.jobs = jobs;
    cfg.allow_n10 = allow_n10;

    std::vector<cem::VerificationReport> reports;
    try {
        reports = cem::run_matrix(cfg);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    std::string text;
    std::size_t failed = 0, expected = 0;
    for (const auto& r : reports) {
        if (!r.pass) (cem::is_informational(r) ? expected : failed)++;
        text += format == "json" ? cem::report_json_line(r) : cem::report_table_line(r);
        text += "\n";
    }
    if (format != "json") {
        text += std::to_string(reports.size()) + " reports, " + std::to_string(failed) +
                " failed, " + std::to_string(expected) + " expected mismatches\n";
    }
    return emit(text, out_path, failed == 0 ? kExitOk : kExitFail);
}

int run_bijection_word(const std::vector<long long>& letters, const std::string& out_path) {
    cem::Word w;
    for (long long v : letters) {
        if (v < 0) {
            std::cerr << "malformed word list: letters must be nonnegative\n";
            return kExitUsage;
        }
        w.push_back(static_cast<unsigned>(v));
    }
    const cem::BijectionTrace tr = cem::word_to_pair_trace(w);
    std::string text;
    text += "w      = " + join_row(tr.w) + "\n";
    text += "wbar   = " + join_row(tr.wbar) + "\n";
    text += "sigma  = " + join_row(tr.sigma.values()) + "\n";
    text += "z      = " + join_row(tr.z) + "\n";
    text += "mu     = " + join_row(tr.mu) + "\n";
    text += "lambda = " + partition_str(tr.lambda) + "\n";
    text += "P1: max(w) = des(sigma) + len(lambda): " + std::to_string(cem::maxw(w)) + " = " +
            std::to_string(cem::des(tr.sigma)) + " + " + std::to_string(tr.lambda.len()) + "\n";
    text += "P2: sum(w) = maj(sigma) + sum(lambda): " + std::to_string(cem::sumt(w)) + " = " +
            std::to_string(cem::maj(tr.sigma)) + " + " + std::to_string(tr.lambda.sum()) + "\n";
    text += "P3: coinv(w) = inv(sigma): " + std::to_string(cem::coinv(w)) + " = " +
            std::to_string(cem::inv(tr.sigma)) + "\n";
    return emit(text, out_path, kExitOk);
}

int run_bijection_sweep(unsigned n, unsigned max_letter, const std::string& out_path) {
    const cem::SweepResult res = cem::bijection_exhaustive_sweep(n, max_letter);
    std::string text = std::to_string(res.words) + " words, ";
    text += res.failures == 0 ? "all pass" : std::to_string(res.failures) + " failures";
    text += "\n";
    return emit(text, out_path, res.failures == 0 ? kExitOk : kExitFail);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cyclotomic Euler-Mahonian polynomial toolkit"};
    app.require_subcommand(1);

    bool trunc_env_ok = true;
    const unsigned trunc_default = default_trunc(trunc_env_ok);

    // poly
    auto* poly = app.add_subcommand("poly", "print A_n(t,q,p), optionally specialized");
    unsigned poly_n = 0;
    unsigned poly_m = 0;
    bool poly_t1 = false, poly_q1 = false, poly_allow = false;
    unsigned poly_jobs = 1;
    std::string poly_out;
    poly->add_option("--n", poly_n, "degree of the symmetric group")->required();
    auto* poly_m_opt = poly->add_option("--m", poly_m, "specialize p to a primitive m-th root of unity");
    poly->add_flag("--t1", poly_t1, "specialize t = 1");
    poly->add_flag("--q1", poly_q1, "specialize q = 1");
    poly->add_flag("--allow-n10", poly_allow, "permit the n = 10 enumeration");
    poly->add_option("--jobs", poly_jobs, "worker threads")->check(CLI::PositiveNumber);
    poly->add_option("--out", poly_out, "also write the output bytes to this file");

    // verify
    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    std::vector<std::string> suites;
    unsigned n_max = 8;
    std::vector<unsigned> m_set = {1, 2, 3, 4, 5, 6};
    unsigned trunc = trunc_default;
    std::string format = "table";
    unsigned jobs = 1;
    bool verify_allow = false;
    std::string verify_out;
    verify->add_option("--suite", suites, "suite names or 'all'")->required()->delimiter(',');
    verify->add_option("--n-max", n_max, "largest symmetric group degree");
    verify->add_option("--m-set", m_set, "root-of-unity orders")->delimiter(',');
    verify->add_option("--trunc", trunc, "series truncation order (default: CEM_TRUNC or 12)");
    verify->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--allow-n10", verify_allow, "permit the n = 10 enumeration");
    verify->add_option("--out", verify_out, "also write the output bytes to this file");

    // bijection
    auto* bij = app.add_subcommand("bijection", "trace or sweep the word correspondence");
    std::vector<long long> word_letters;
    unsigned bij_n = 0;
    unsigned max_letter = 5;
    bool exhaustive = false;
    std::string bij_out;
    auto* word_opt = bij->add_option("--word", word_letters, "comma-separated letters")->delimiter(',');
    auto* bij_n_opt = bij->add_option("--n", bij_n, "word length for the exhaustive sweep");
    bij->add_option("--max-letter", max_letter, "largest letter in the sweep alphabet");
    bij->add_flag("--exhaustive", exhaustive, "check every word of length n");
    bij->add_option("--out", bij_out, "also write the output bytes to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (!trunc_env_ok) {
        std::cerr << "CEM_TRUNC must be a nonnegative integer\n";
        return kExitUsage;
    }

    try {
        if (poly->parsed())
            return run_poly(poly_n, poly_m_opt->count() > 0, poly_m, poly_t1, poly_q1, poly_allow,
                            poly_jobs, poly_out);
        if (verify->parsed())
            return run_verify(suites, n_max, m_set, trunc, format, jobs, verify_allow, verify_out);
        if (bij->parsed()) {
            if (word_opt->count() > 0 && !exhaustive) return run_bijection_word(word_letters, bij_out);
            if (exhaustive && bij_n_opt->count() > 0) return run_bijection_sweep(bij_n, max_letter, bij_out);
            std::cerr << "bijection requires either --word or --n with --exhaustive\n";
            return kExitUsage;
        }
    } catch (const cem::ResourceCapError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
