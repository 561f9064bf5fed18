#include "lawvere/cli/cli.hpp"

#include "lawvere/cli/formats.hpp"
#include "lawvere/diagonal.hpp"
#include "lawvere/errors.hpp"
#include "lawvere/formal/lemma.hpp"
#include "lawvere/formal/text.hpp"
#include "lawvere/instances.hpp"
#include "lawvere/universe/constructions.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>

namespace lawvere::cli {

namespace {

using ojson = nlohmann::ordered_json;
using diagonal::Index;

constexpr std::size_t kNonReSize = 16;
constexpr std::uint64_t kNonReFuel = 200;
constexpr std::size_t kAbbreviateDigits = 60;

struct Report {
    ojson certificate;
    bool verified = false;
    std::string digest_source;
};

std::string join(const std::vector<std::string>& args)
{
    std::string out = "lawvere";
    for (const auto& a : args) {
        out += ' ';
        out += a;
    }
    return out;
}

// ---- diagonal-core rendering -------------------------------------------

ojson render_g(const diagonal::YMap& g)
{
    ojson values = ojson::object();
    ojson preimages = ojson::object();
    for (Index y = 0; y < g.y.size(); ++y) {
        preimages[g.y.label(y)] = ojson::array();
    }
    for (Index t = 0; t < g.values.size(); ++t) {
        values[g.domain.label(t)] = g.y.label(g.values[t]);
        preimages[g.y.label(g.values[t])].push_back(g.domain.label(t));
    }
    return ojson{{"g", values}, {"preimages", preimages}};
}

ojson label_list(const diagonal::Carrier& c, const std::vector<Index>& idx)
{
    ojson out = ojson::array();
    for (Index i : idx) {
        out.push_back(c.label(i));
    }
    return out;
}

ojson render_witness(const diagonal::NonRepresentabilityReport& r, const diagonal::EvalMatrix& f)
{
    ojson out = ojson::array();
    for (Index s = 0; s < r.witness.size(); ++s) {
        Index t = r.witness[s];
        out.push_back(ojson{{"column", f.cols().label(s)},
                            {"row", f.rows().label(t)},
                            {"g", f.y().label(r.g.values[t])},
                            {"f", f.y().label(f.at(t, s))}});
    }
    return out;
}

bool report_holds(const diagonal::NonRepresentabilityReport& r, const diagonal::EvalMatrix& f)
{
    return r.verify(f) && diagonal::representing_columns(r.g, f).empty();
}

// ---- instances ------------------------------------------------------------

template <typename V, typename Show>
Report render_instance(const std::string& name, const instances::InstanceResult<V>& res,
                       Show show)
{
    const auto& f = res.matrix;
    ojson values = ojson::object();
    for (Index i = 0; i < res.diagonal_object.size(); ++i) {
        values[f.rows().label(i)] = show(res.diagonal_object[i]);
    }
    ojson cert{{"instance", name},
               {"alpha", label_list(res.alpha.carrier(),
                                    {res.alpha.map().begin(), res.alpha.map().end()})},
               {"diagonal_object", values},
               {"representing_columns",
                label_list(f.cols(), diagonal::representing_columns(res.report.g, f))},
               {"witness", render_witness(res.report, f)}};
    return Report{std::move(cert), report_holds(res.report, f), {}};
}

ojson true_labels(const instances::InstanceResult<bool>& res)
{
    ojson out = ojson::array();
    for (Index i = 0; i < res.diagonal_object.size(); ++i) {
        if (res.diagonal_object[i]) {
            out.push_back(res.matrix.rows().label(i));
        }
    }
    return out;
}

Report relation_report(const std::string& name, const instances::DescribesMatrix& m,
                       const std::string& set_name)
{
    auto res = instances::relation_instance(m);
    Report r = render_instance(name, res, [](bool b) { return b; });
    r.certificate[set_name] = true_labels(res);
    return r;
}

// ---- universe ---------------------------------------------------------------

universe::ProgramIndex program_arg(const std::string& text)
{
    if (auto n = parse_decimal(text)) {
        return universe::ProgramIndex{std::move(*n)};
    }
    return universe::index_of(*universe::parse_program(text));
}

ojson render_program(const universe::ProgramIndex& p)
{
    return ojson{{"index", to_decimal(p.code)},
                 {"program", universe::to_sexpr(*universe::decode(p.code))}};
}

ojson render_samples(const std::vector<universe::Sample>& samples, const char* left,
                     const char* right)
{
    ojson out = ojson::array();
    for (const auto& s : samples) {
        out.push_back(ojson{{"input", to_decimal(s.input)},
                            {left, universe::describe(s.left)},
                            {right, universe::describe(s.right)},
                            {"agree", s.agree}});
    }
    return out;
}

// ---- formal -----------------------------------------------------------------

ojson render_number(const Natural& n, bool full)
{
    ojson out{{"digits", decimal_digits(n)}, {"fnv1a64", fnv1a64(to_decimal(n))}};
    if (full) {
        out["value"] = to_decimal(n);
    }
    return out;
}

Report lemma_report(formal::SentenceKind kind, const formal::LemmaCertificate& c,
                    bool print_number)
{
    const formal::PrintOptions full{};
    const formal::PrintOptions brief{kAbbreviateDigits};
    ojson cert{{"sentence", formal::to_string(kind)},
               {"E", formal::to_text(*c.e, full)},
               {"variable", formal::var_name(c.variable)},
               {"G", formal::to_text(*c.g, full)},
               {"C", formal::to_text(*c.c, brief)},
               {"goedel_G", render_number(c.goedel_g, print_number)},
               {"goedel_C", render_number(c.goedel_c, print_number)},
               {"reduced", formal::to_text(*c.reduced, brief)},
               {"target", formal::to_text(*c.target, brief)},
               {"raw_substitution_identity", *c.reduced == *c.raw_target()}};
    bool ok = c.recheck();
    if (kind == formal::SentenceKind::Curry) {
        auto unquoted = formal::unquote_once(c.reduced);
        bool exhibits = *unquoted == *formal::imp(c.c, c.e->right());
        cert["unquote_step"] = formal::to_text(*unquoted, brief);
        cert["unquote_gives_C_implies_A"] = exhibits;
        ok = ok && exhibits;
    }
    return Report{std::move(cert), ok, {}};
}

// ---- dispatch ---------------------------------------------------------------

struct Settings {
    std::string data_dir;
    std::string input;
    bool section = false;
    std::string demo;
    std::uint64_t fuel = 0;
    std::uint64_t retry_fuel = 0;
    std::string h, candidate, decider, a, b;
    std::size_t n = 0;
    std::string formula;
    bool print_number = false;
};

std::filesystem::path data_file(const Settings& s, const char* name)
{
    return std::filesystem::path(s.data_dir) / name;
}

Report run_diagonal(const Settings& s, int& exit_code, std::ostream& err)
{
    std::string text = read_file(s.input);
    MatrixFile mf = parse_matrix_file(parse_json(text, s.input), s.section);
    const auto& f = mf.f;
    auto fixed = diagonal::fixed_points(mf.alpha);
    ojson cert{{"form", mf.section ? "section" : "diagonal"},
               {"fixed_points", label_list(f.y(), fixed)}};
    if (fixed.empty()) {
        auto report = diagonal::cantor_witness(f, mf.alpha, mf.section);
        cert["theorem"] = "non-representability";
        cert.update(render_g(report.g));
        cert["representing_columns"] =
            label_list(f.cols(), diagonal::representing_columns(report.g, f));
        cert["witness"] = render_witness(report, f);
        return Report{std::move(cert), report_holds(report, f), text};
    }

    err << "not applicable: endomap has a fixed point, no non-representability certificate\n";
    exit_code = kNotVerified;
    auto g = mf.section ? diagonal::compose_with_section(f, mf.alpha, *mf.section)
                        : diagonal::compose_diagonal(f, mf.alpha);
    cert["theorem"] = "fixed-point";
    cert.update(render_g(g));
    cert["representing_columns"] = label_list(f.cols(), diagonal::representing_columns(g, f));
    ojson witness = nullptr;
    if (!mf.section) {
        if (auto w = diagonal::weak_diagonal_fixed_point(f, mf.alpha)) {
            witness = ojson{{"column", f.cols().label(w->column)},
                            {"value", f.y().label(w->value)},
                            {"holds", w->verify(f, mf.alpha)}};
        }
    }
    cert["fixed_point_witness"] = witness;
    return Report{std::move(cert), false, text};
}

Report run_demo(const Settings& s)
{
    const std::string& name = s.demo;
    if (name == "powerset") {
        std::string text = read_file(data_file(s, "powerset.json"));
        auto fam = parse_subset_family(parse_json(text, "powerset.json"));
        auto res = instances::powerset_instance(fam);
        Report r = render_instance(name, res, [](bool b) { return b; });
        ojson members = ojson::array();
        for (Index i = 0; i < res.diagonal_object.size(); ++i) {
            if (res.diagonal_object[i]) {
                members.push_back(i);
            }
        }
        auto via_relation = instances::relation_instance(instances::membership_relation(fam));
        bool agree = via_relation.diagonal_object == res.diagonal_object;
        r.certificate["G"] = members;
        r.certificate["relation_path_agrees"] = agree;
        r.verified = r.verified && agree;
        r.digest_source = text;
        return r;
    }
    if (name == "russell" || name == "grelling") {
        std::string file = name + ".json";
        std::string text = read_file(data_file(s, file.c_str()));
        auto m = describes_from_matrix_file(parse_json(text, file));
        Report r = relation_report(name, m, name == "russell" ? "russell_set" : "heterological");
        r.digest_source = text;
        return r;
    }
    if (name == "strong-liar") {
        std::string text = read_file(data_file(s, "strong_liar.json"));
        auto res = instances::strong_liar_instance(parse_trivalued(parse_json(text, "strong_liar.json")));
        Report r = render_instance(name, res,
                                   [](instances::Truth v) { return std::string(1, truth_letter(v)); });
        r.certificate["alpha_fixed_points"] = diagonal::fixed_points(res.alpha).size();
        r.digest_source = text;
        return r;
    }
    if (name == "richard") {
        std::string text = read_file(data_file(s, "richard.json"));
        auto m = parse_digit_table(parse_json(text, "richard.json"));
        auto res = instances::richard_instance(m);
        Report r = render_instance(name, res, [](std::uint8_t d) { return int(d); });
        bool rule = true;
        std::string digits;
        for (Index i = 0; i < res.diagonal_object.size(); ++i) {
            rule = rule && res.diagonal_object[i] == 9 - m.cells[i][i];
            digits += char('0' + res.diagonal_object[i]);
        }
        if (m.cells.size() > 15) {
            r.certificate["f(4,15)"] = int(m.cells[4][15]);
        }
        r.certificate["digits"] = digits;
        r.certificate["digit_rule_holds"] = rule;
        r.verified = r.verified && rule;
        r.digest_source = text;
        return r;
    }
    // nonre
    auto m = universe::bounded_halting_matrix(kNonReSize, kNonReFuel);
    Report r = relation_report(name, m, "diagonal_language");
    r.certificate["programs"] = kNonReSize;
    r.certificate["fuel"] = kNonReFuel;
    r.certificate["note"] = "column j is the set of inputs program j accepts within the fuel bound";
    return r;
}

} // namespace

std::string fnv1a64(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const std::filesystem::path& data_dir)
{
    Settings s;
    s.data_dir = data_dir.string();

    CLI::App app{"Diagonal arguments, fixed points and self-reference", "lawvere"};
    app.add_option("--data-dir", s.data_dir, "Directory holding the bundled demo tables");
    app.require_subcommand(1);

    auto* diag = app.add_subcommand("diagonal", "Certificate for a matrix file");
    diag->add_option("--input", s.input, "Matrix JSON file")->required();
    diag->add_flag("--section", s.section, "Use beta/beta_bar instead of the diagonal");

    auto* demo = app.add_subcommand("demo", "Run a bundled paradox instance");
    demo->add_option("name", s.demo)
        ->required()
        ->check(CLI::IsMember({"powerset", "russell", "grelling", "strong-liar", "richard", "nonre"}));

    auto* uni = app.add_subcommand("universe", "Computable-universe constructions");
    uni->require_subcommand(1);
    auto* quine = uni->add_subcommand("quine", "Build and check a self-reproducing program");
    quine->add_option("--fuel", s.fuel)->default_val(1000000);
    auto* rec = uni->add_subcommand("recursion", "Fixed point of a program transformer");
    rec->set_help_flag("--help", "Print this help message and exit");
    rec->add_option("--h", s.h, "Transformer (index or s-expression)")->required();
    rec->add_option("--fuel", s.fuel)->default_val(100000);
    rec->add_option("--retry-fuel", s.retry_fuel)->default_val(1000000);
    auto* halt = uni->add_subcommand("refute-halt", "Refute a claimed halting decider");
    halt->add_option("--candidate", s.candidate, "Binary candidate program")->required();
    halt->add_option("--fuel", s.fuel)->default_val(100000);
    auto* rice = uni->add_subcommand("rice", "Refute a claimed decider of a program property");
    rice->add_option("--decider", s.decider)->required();
    rice->add_option("--a", s.a, "Program claimed to have the property")->required();
    rice->add_option("--b", s.b, "Program claimed not to have it")->required();
    rice->add_option("--fuel", s.fuel)->default_val(100000);
    auto* hm = uni->add_subcommand("halt-matrix", "Fuel-bounded halting table");
    hm->add_option("--n", s.n)->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    hm->add_option("--fuel", s.fuel)->required();

    auto* formal_cmd = app.add_subcommand("formal", "Self-referential sentences");
    formal_cmd->require_subcommand(1);
    std::vector<std::pair<CLI::App*, formal::SentenceKind>> sentences{
        {formal_cmd->add_subcommand("goedel", "forall y. not Prov(y, x)"), formal::SentenceKind::Goedel},
        {formal_cmd->add_subcommand("rosser", "Rosser sentence"), formal::SentenceKind::Rosser},
        {formal_cmd->add_subcommand("tarski", "not T(x)"), formal::SentenceKind::Tarski},
        {formal_cmd->add_subcommand("parikh", "no proof shorter than n"), formal::SentenceKind::Parikh},
        {formal_cmd->add_subcommand("curry", "unq(x) -> A"), formal::SentenceKind::Curry},
    };
    for (auto& [sub, kind] : sentences) {
        sub->add_flag("--print-number", s.print_number, "Print Gödel numbers in full");
        if (kind == formal::SentenceKind::Parikh) {
            sub->add_option("--n", s.n, "Proof-length bound")->required();
        }
        if (kind == formal::SentenceKind::Curry) {
            sub->add_option("--a", s.formula, "Closed consequent formula")->required();
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kVerified;
        }
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    int exit_code = kVerified;
    Report report;
    try {
        if (diag->parsed()) {
            report = run_diagonal(s, exit_code, err);
        } else if (demo->parsed()) {
            report = run_demo(s);
        } else if (quine->parsed()) {
            auto q = universe::quine();
            ojson checks = ojson::array();
            bool ok = true;
            for (unsigned i = 0; i < 3; ++i) {
                auto o = universe::eval(q, {Natural(i)}, s.fuel);
                ok = ok && o == universe::Outcome{universe::Value{q.code}};
                checks.push_back(ojson{{"input", i}, {"outcome", universe::describe(o)}});
            }
            report.certificate = ojson{{"quine", render_program(q)},
                                       {"transformer", render_program(universe::quine_transformer())},
                                       {"fuel", s.fuel},
                                       {"self_evaluation", checks}};
            report.verified = ok;
        } else if (rec->parsed()) {
            auto h = program_arg(s.h);
            std::vector<Natural> inputs;
            for (unsigned i = 0; i <= 5; ++i) {
                inputs.emplace_back(i);
            }
            auto check = universe::check_recursion_fixed_point(h, inputs, s.fuel, s.retry_fuel);
            report.certificate = ojson{{"h", render_program(h)},
                                       {"n0", render_program(check.n0)},
                                       {"h_of_n0", universe::describe(check.h_of_n0)},
                                       {"fuel", s.fuel},
                                       {"retry_fuel", s.retry_fuel},
                                       {"samples", render_samples(check.samples, "n0", "h_of_n0")}};
            report.verified = check.verified();
        } else if (halt->parsed()) {
            auto w = universe::refute_halting(program_arg(s.candidate), s.fuel);
            report.certificate =
                ojson{{"candidate", render_program(w.candidate)},
                      {"g", render_program(w.g_index)},
                      {"fuel", w.fuel},
                      {"candidate_on_g_g", universe::describe(w.candidate_answer)},
                      {"g_fuel", w.fuel + universe::kRefutationOverhead},
                      {"g_on_g", universe::describe(w.g_run)},
                      {"verdict", universe::to_string(w.verdict)}};
            report.verified = w.consistent();
        } else if (rice->parsed()) {
            auto r = universe::rice_contradiction(program_arg(s.decider), program_arg(s.a),
                                                  program_arg(s.b), s.fuel);
            report.certificate = ojson{{"decider", render_program(r.decider)},
                                       {"a", render_program(r.a)},
                                       {"b", render_program(r.b)},
                                       {"h", render_program(r.h_index)},
                                       {"n0", render_program(r.n0)},
                                       {"fuel", s.fuel},
                                       {"decider_on_n0", universe::describe(r.decider_answer)},
                                       {"claims_member", r.claims_member()},
                                       {"h_of_n0", universe::describe(r.h_value)},
                                       {"samples", render_samples(r.samples, "n0", "h_of_n0")},
                                       {"verdict", universe::to_string(r.verdict)}};
            report.verified = r.verified();
        } else if (hm->parsed()) {
            auto m = universe::bounded_halting_matrix(s.n, s.fuel);
            report = relation_report("halt-matrix", m, "diagonal_language");
            ojson rows = ojson::array();
            for (const auto& row : m.rel) {
                std::string bits;
                for (bool b : row) {
                    bits += b ? '1' : '0';
                }
                rows.push_back(bits);
            }
            report.certificate["fuel"] = s.fuel;
            report.certificate["rows"] = rows;
        } else {
            for (auto& [sub, kind] : sentences) {
                if (!sub->parsed()) {
                    continue;
                }
                formal::FormulaPtr a;
                if (kind == formal::SentenceKind::Curry) {
                    a = formal::parse_formula(s.formula);
                }
                auto cert = formal::named_sentence(kind, Natural(static_cast<unsigned long>(s.n)), a);
                report = lemma_report(kind, cert, s.print_number);
            }
        }
    } catch (const NotApplicable& e) {
        err << "not applicable: " << e.what() << "\n";
        return kNotVerified;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    std::string digest_source = report.digest_source.empty() ? join(args) : report.digest_source;
    ojson doc{{"command", join(args)},
              {"inputs_digest", fnv1a64(digest_source)},
              {"certificate", std::move(report.certificate)},
              {"verified", report.verified}};
    out << doc.dump(2) << "\n";
    if (exit_code == kVerified && !report.verified) {
        exit_code = kNotVerified;
    }
    return exit_code;
}

} // namespace lawvere::cli
