// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "golden_cases.hpp"
#include "lawvere/cli/cli.hpp"
#include "lawvere/cli/formats.hpp"
#include "lawvere/diagonal.hpp"
#include "lawvere/formal/lemma.hpp"
#include "lawvere/formal/text.hpp"
#include "lawvere/instances.hpp"
#include "lawvere/universe/constructions.hpp"
#include "random_programs.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

namespace {

using namespace lawvere;
using diagonal::Carrier;
using diagonal::EndoMap;
using diagonal::EvalMatrix;
using diagonal::Index;
using testing::Rng;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

EvalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t ny)
{
    std::vector<std::vector<Index>> cells(rows, std::vector<Index>(cols));
    for (auto& row : cells) {
        for (auto& c : row) {
            c = testing::pick(rng, 0, static_cast<unsigned>(ny - 1));
        }
    }
    return EvalMatrix(Carrier(rows), Carrier(cols), Carrier(ny), std::move(cells));
}

std::vector<EndoMap> fixed_point_free_maps(std::size_t ny)
{
    std::vector<EndoMap> out;
    std::vector<Index> cur(ny, 0);
    for (;;) {
        bool free = true;
        for (Index y = 0; y < ny; ++y) {
            free = free && cur[y] != y;
        }
        if (free) {
            out.emplace_back(Carrier(ny), cur);
        }
        std::size_t i = 0;
        while (i < ny && ++cur[i] == ny) {
            cur[i++] = 0;
        }
        if (i == ny) {
            return out;
        }
    }
}

Outcome cantor_suite()
{
    auto start = Clock::now();
    Rng rng(1001);
    std::size_t checks = 0;
    std::size_t failures = 0;
    for (std::size_t nt = 1; nt <= 5; ++nt) {
        for (std::size_t ny = 2; ny <= 3; ++ny) {
            auto alphas = fixed_point_free_maps(ny);
            for (int i = 0; i < 200; ++i) {
                auto f = random_matrix(rng, nt, nt, ny);
                for (const auto& alpha : alphas) {
                    ++checks;
                    auto g = diagonal::compose_diagonal(f, alpha);
                    if (!diagonal::representing_columns(g, f).empty()) {
                        ++failures;
                    }
                }
            }
        }
    }
    double t = seconds_since(start);
    return {failures == 0 && t < 5.0, std::to_string(checks) + " checks, " +
                                          std::to_string(failures) + " failures, " +
                                          fmt_seconds(t) + " (limit 5s)"};
}

Outcome exhaustive_oracle()
{
    EndoMap swap(Carrier(2), {1, 0});
    std::size_t failures = 0;
    for (unsigned bits = 0; bits < 16; ++bits) {
        std::vector<std::vector<Index>> cells{{bits & 1u, (bits >> 1) & 1u},
                                              {(bits >> 2) & 1u, (bits >> 3) & 1u}};
        EvalMatrix f(Carrier(2), Carrier(2), Carrier(2), cells);
        auto g = diagonal::compose_diagonal(f, swap);
        // Every map T -> Y, and whether some column of f equals it.
        bool g_enumerated = false;
        for (unsigned h = 0; h < 4; ++h) {
            std::vector<Index> map{h & 1u, (h >> 1) & 1u};
            bool is_column = false;
            for (Index s = 0; s < 2; ++s) {
                is_column = is_column || (cells[0][s] == map[0] && cells[1][s] == map[1]);
            }
            if (map == g.values) {
                g_enumerated = true;
                failures += is_column ? 1 : 0;
            }
        }
        failures += g_enumerated ? 0 : 1;
        failures += diagonal::representing_columns(g, f).empty() ? 0 : 1;
    }
    return {failures == 0, "16 matrices x 4 maps, " + std::to_string(failures) + " failures"};
}

diagonal::Section random_section(Rng& rng, std::size_t nt, std::size_t ns)
{
    // beta_bar picks distinct rows; beta sends them back and the rest anywhere.
    std::vector<Index> rows(nt);
    for (Index t = 0; t < nt; ++t) {
        rows[t] = t;
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    std::vector<Index> beta_bar(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(ns));
    std::vector<Index> beta(nt);
    for (auto& b : beta) {
        b = testing::pick(rng, 0, static_cast<unsigned>(ns - 1));
    }
    for (Index s = 0; s < ns; ++s) {
        beta[beta_bar[s]] = s;
    }
    return diagonal::Section(std::move(beta), std::move(beta_bar));
}

Outcome generalized_suite()
{
    Rng rng(1003);
    std::size_t checks = 0;
    std::size_t failures = 0;
    for (std::size_t nt = 1; nt <= 5; ++nt) {
        for (std::size_t ny = 2; ny <= 3; ++ny) {
            auto alphas = fixed_point_free_maps(ny);
            for (int i = 0; i < 200; ++i) {
                std::size_t ns = 1 + testing::pick(rng, 0, static_cast<unsigned>(nt - 1));
                auto sec = random_section(rng, nt, ns);
                auto f = random_matrix(rng, nt, ns, ny);
                for (const auto& alpha : alphas) {
                    ++checks;
                    auto g = diagonal::compose_with_section(f, alpha, sec);
                    auto report = diagonal::cantor_witness(f, alpha, sec);
                    bool ok = diagonal::representing_columns(g, f).empty() && report.verify(f) &&
                              report.g == g;
                    for (Index s = 0; s < ns; ++s) {
                        ok = ok && report.witness[s] == sec.beta_bar()[s];
                    }
                    failures += ok ? 0 : 1;
                }
            }
        }
    }
    return {failures == 0,
            std::to_string(checks) + " checks, " + std::to_string(failures) + " failures"};
}

Outcome diagonal_theorem()
{
    Rng rng(1004);
    std::size_t found = 0;
    std::size_t failures = 0;
    std::size_t tried = 0;
    while (found < 500 && tried < 1000000) {
        ++tried;
        std::size_t nt = 1 + testing::pick(rng, 0, 4);
        std::size_t ny = 1 + testing::pick(rng, 0, 2);
        auto f = random_matrix(rng, nt, nt, ny);
        std::vector<Index> a(ny);
        for (auto& v : a) {
            v = testing::pick(rng, 0, static_cast<unsigned>(ny - 1));
        }
        EndoMap alpha(Carrier(ny), a);
        auto g = diagonal::compose_diagonal(f, alpha);
        auto cols = diagonal::representing_columns(g, f);
        if (cols.empty()) {
            continue;
        }
        ++found;
        auto w = diagonal::weak_diagonal_fixed_point(f, alpha);
        bool ok = w.has_value() && w->column == cols.front() &&
                  w->value == f.at(w->column, w->column) && alpha(w->value) == w->value &&
                  w->verify(f, alpha);
        failures += ok ? 0 : 1;
    }
    return {found == 500 && failures == 0,
            std::to_string(found) + " representable instances, " + std::to_string(failures) +
                " failures"};
}

Outcome encoding_bijection()
{
    std::size_t failures = 0;
    for (unsigned long n = 0; n <= 1000000; ++n) {
        Natural code(n);
        failures += universe::encode(*universe::decode(code)) == code ? 0 : 1;
    }
    Rng rng(1005);
    for (int i = 0; i < 1000; ++i) {
        auto e = testing::random_expr(rng, 8);
        failures += *universe::decode(universe::encode(*e)) == *e ? 0 : 1;
    }
    return {failures == 0, "10^6+1 codes and 1000 trees, " + std::to_string(failures) + " failures"};
}

Outcome smn_suite()
{
    auto start = Clock::now();
    Rng rng(1006);
    std::size_t failures = 0;
    for (int i = 0; i < 300; ++i) {
        Natural p = universe::encode(*testing::random_safe_body(rng, 5, 2));
        for (unsigned y = 0; y <= 9; ++y) {
            universe::ProgramIndex sp = universe::smn_meta(p, y);
            for (unsigned x = 0; x <= 9; ++x) {
                auto left = universe::eval(sp, {x}, 100000);
                auto right = universe::eval(universe::ProgramIndex{p}, {y, x}, 100000);
                bool ok = universe::is_value(left) && left == right;
                failures += ok ? 0 : 1;
            }
        }
    }
    double t = seconds_since(start);
    return {failures == 0 && t < 10.0, "30000 evaluations, " + std::to_string(failures) +
                                           " failures, " + fmt_seconds(t) + " (limit 10s)"};
}

Outcome recursion_suite()
{
    Rng rng(1007);
    std::vector<Natural> inputs;
    for (unsigned i = 0; i <= 5; ++i) {
        inputs.emplace_back(i);
    }
    std::size_t failures = 0;
    for (int i = 0; i < 25; ++i) {
        universe::ProgramIndex h = universe::index_of(*testing::random_transformer(rng, 4));
        auto check = universe::check_recursion_fixed_point(h, inputs, 100000, 1000000);
        failures += check.verified() ? 0 : 1;
    }
    return {failures == 0, "25 transformers x 6 inputs, " + std::to_string(failures) + " failures"};
}

Outcome quine_check()
{
    auto start = Clock::now();
    auto q = universe::quine();
    std::size_t failures = 0;
    for (unsigned i = 0; i <= 2; ++i) {
        failures += universe::eval(q, {i}, 1000000) == universe::Outcome(universe::Value{q.code}) ? 0 : 1;
    }
    double t = seconds_since(start);
    return {failures == 0 && t < 1.0, "q has " + std::to_string(decimal_digits(q.code)) +
                                          " digits, " + std::to_string(failures) + " failures, " +
                                          fmt_seconds(t) + " (limit 1s)"};
}

Outcome halting_refutation()
{
    using universe::HaltVerdict;
    // always-1, always-0, and (run %1 %1), which loops on its own index.
    struct Case {
        universe::ProgramIndex candidate;
        HaltVerdict expected;
    };
    const Case cases[] = {
        {universe::index_of(*universe::constant(1)), HaltVerdict::SaidHaltButDiverged},
        {universe::index_of(*universe::constant(0)), HaltVerdict::SaidDivergeButHalted},
        {universe::index_of(*universe::run(universe::var(1), universe::var(1))),
         HaltVerdict::CandidateNotTotal},
    };
    std::string detail;
    bool pass = true;
    for (const auto& c : cases) {
        auto w = universe::refute_halting(c.candidate, 100000);
        pass = pass && w.verdict == c.expected && w.consistent();
        detail += (detail.empty() ? "" : ", ") + universe::to_string(w.verdict);
    }
    return {pass, detail};
}

Outcome lemma_suite()
{
    Rng rng(1010);
    std::size_t failures = 0;
    std::size_t raw_identical = 0;
    auto check = [&](const formal::LemmaCertificate& cert) {
        auto expected = formal::reduce_diag(formal::substitute(cert.e, cert.variable,
                                                               formal::num(cert.goedel_c)));
        bool ok = cert.verified && *formal::reduce_diag(cert.c) == *expected && cert.recheck();
        failures += ok ? 0 : 1;
        raw_identical += *cert.reduced == *cert.raw_target() ? 1 : 0;
    };
    for (int i = 0; i < 100; ++i) {
        check(formal::diagonal_sentence(testing::random_lemma_input(rng, 4, i % 2 == 0),
                                        formal::var::x));
    }
    using formal::SentenceKind;
    auto a = formal::pred(formal::sym::A, {});
    for (auto kind : {SentenceKind::Goedel, SentenceKind::Rosser, SentenceKind::Tarski,
                      SentenceKind::Parikh, SentenceKind::Curry}) {
        check(formal::named_sentence(kind, 100, a));
    }
    return {failures == 0, "105 sentences, " + std::to_string(failures) +
                               " failures; identical before neg-reduction of the target: " +
                               std::to_string(raw_identical) + "/105"};
}

Outcome richard_value()
{
    std::string text = cli::read_file(std::string(LAWVERE_DATA_DIR) + "/richard.json");
    auto m = cli::parse_digit_table(cli::parse_json(text, "richard.json"));
    auto res = instances::richard_instance(m);
    bool ok = m.cells.size() > 15 && m.cells[4][15] == 1;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < m.cells.size(); ++i) {
        violations += res.diagonal_object[i] == 9 - m.cells[i][i] ? 0 : 1;
    }
    return {ok && violations == 0 && res.report.verify(res.matrix),
            "f(4,15)=" + std::to_string(m.cells.size() > 15 ? int(m.cells[4][15]) : -1) +
                ", digit rule violations " + std::to_string(violations)};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome golden_files()
{
    std::size_t failures = 0;
    std::string failed;
    for (const auto& c : testing::golden_cases()) {
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run_command(c.args, out, err, LAWVERE_DATA_DIR);
        std::string expected = slurp(std::string(LAWVERE_GOLDEN_DIR) + "/" + c.name + ".json");
        if (code != cli::kVerified || expected.empty() || out.str() != expected) {
            ++failures;
            failed += " " + c.name;
        }
    }
    return {failures == 0, std::to_string(testing::golden_cases().size()) + " reports, " +
                               std::to_string(failures) + " mismatches" + failed};
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"cantor-suite", cantor_suite},
        {"exhaustive-oracle", exhaustive_oracle},
        {"generalized-suite", generalized_suite},
        {"diagonal-theorem", diagonal_theorem},
        {"encoding-bijection", encoding_bijection},
        {"smn", smn_suite},
        {"recursion-theorem", recursion_suite},
        {"quine", quine_check},
        {"halting-refutation", halting_refutation},
        {"diagonalization-lemma", lemma_suite},
        {"richard-value", richard_value},
        {"cli-golden", golden_files},
    };
    int failed = 0;
    int number = 0;
    for (const auto& c : criteria) {
        ++number;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", number, c.name, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", number - failed, number);
    return failed == 0 ? 0 : 1;
}
