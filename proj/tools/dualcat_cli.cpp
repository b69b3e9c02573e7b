#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualcat/acceptance.hpp"
#include "dualcat/modring.hpp"
#include "dualcat/oracle.hpp"
#include "dualcat/report.hpp"
#include "dualcat/sequences.hpp"
#include "dualcat/verify.hpp"

namespace {

using dualcat::Rational;

struct OutputOptions {
    std::string format = "table";
    std::string path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "Write the report to a file instead of stdout");
}

// Writes through to stdout unless --output was given.
class Sink {
public:
    explicit Sink(const OutputOptions& opts) {
        if (!opts.path.empty()) {
            file_.open(opts.path);
            if (!file_) throw dualcat::parse_error("cannot open output file '" + opts.path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) values.push_back(Rational::parse(item));
    }
    if (values.empty()) throw dualcat::parse_error("empty rational list '" + text + "'");
    return values;
}

std::pair<int64_t, int64_t> parse_prime_range(const std::string& text) {
    const size_t sep = text.find("..");
    if (sep == std::string::npos)
        throw dualcat::parse_error("prime range must look like A..B, got '" + text + "'");
    try {
        int64_t lo = std::stoll(text.substr(0, sep));
        int64_t hi = std::stoll(text.substr(sep + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw dualcat::parse_error("bad prime range '" + text + "'");
    }
}

std::vector<Rational> integer_grid(int64_t lo, int64_t hi) {
    std::vector<Rational> grid;
    for (int64_t v = lo; v <= hi; ++v)
        if (v != 0) grid.emplace_back(static_cast<long>(v));
    return grid;
}

void print_records(const std::vector<dualcat::verify::VerificationRecord>& records,
                   const dualcat::verify::SweepSummary& summary, const OutputOptions& opts) {
    Sink sink(opts);
    if (opts.format == "json") {
        dualcat::verify::SweepResult result{records, summary};
        sink.stream() << dualcat::verify::to_json(result).dump(2) << '\n';
    } else if (opts.format == "csv") {
        sink.stream() << dualcat::verify::to_csv(records);
    } else {
        sink.stream() << dualcat::verify::to_table(records)
                      << dualcat::verify::summary_line(summary) << '\n';
    }
}

int run_eval(const std::string& kind, int64_t n, const std::optional<std::string>& x_text,
             const std::optional<std::string>& y_text, const std::optional<std::string>& a_text,
             const std::string& mod_text, const OutputOptions& out_opts) {
    const dualcat::Modulus mod = dualcat::Modulus::parse(mod_text);
    const dualcat::BinomialTables tables(mod);
    auto need = [](const std::optional<std::string>& text, const char* flag) {
        if (!text) throw dualcat::parse_error(std::string("missing required flag --") + flag);
        return Rational::parse(*text);
    };
    dualcat::Residue value(0, mod);
    if (kind == "D") {
        value = dualcat::d_eval(n, need(x_text, "x"), need(y_text, "y"), tables);
    } else if (kind == "S") {
        value = dualcat::s_eval(n, need(x_text, "x"), need(y_text, "y"), tables);
    } else if (kind == "J2") {
        value = dualcat::j2_eval(n, tables);
    } else {
        value = dualcat::catalan_inner(n, need(a_text, "a"), tables);
    }
    Sink sink(out_opts);
    if (out_opts.format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = kind;
        j["n"] = n;
        if (x_text) j["x"] = Rational::parse(*x_text).str();
        if (y_text) j["y"] = Rational::parse(*y_text).str();
        if (a_text) j["a"] = Rational::parse(*a_text).str();
        j["mod"] = mod.str();
        j["value"] = value.value();
        sink.stream() << j.dump(2) << '\n';
    } else if (out_opts.format == "csv") {
        sink.stream() << "value,mod\n" << value.value() << ',' << mod.str() << '\n';
    } else {
        sink.stream() << value.value() << " (mod " << mod.str() << ")\n";
    }
    return 0;
}

int run_check(const std::string& statement, int64_t p,
              const std::map<std::string, std::optional<std::string>>& flags,
              const OutputOptions& out_opts) {
    auto need = [&](const char* name) {
        const auto& text = flags.at(name);
        if (!text) throw dualcat::parse_error(std::string("statement ") + statement +
                                              " needs flag --" + name);
        return Rational::parse(*text);
    };
    dualcat::verify::VerificationRecord rec;
    if (statement == "eq1.3")
        rec = dualcat::verify::check_thm_D(p, need("x1"), need("y1"), need("x2"), need("y2"));
    else if (statement == "eq1.4")
        rec = dualcat::verify::check_thm_S(p, need("x1"), need("y1"), need("x2"), need("y2"));
    else if (statement == "eq1.6")
        rec = dualcat::verify::check_thm_catalan(p, need("a"));
    else if (statement == "eq2.3")
        rec = dualcat::verify::check_cor_ab(p, need("a"), need("b"));
    else if (statement == "cor2.4")
        rec = dualcat::verify::check_cor_halves_thirds(p, need("a"), need("b"));
    else if (statement == "cor2.5")
        rec = dualcat::verify::check_cor_34(p, need("a"), need("b"));
    else if (statement == "lemma3.1")
        rec = dualcat::verify::check_lemma_catalan(p, need("m"));
    else if (statement == "kw-p3")
        rec = dualcat::verify::check_kw_mod_p3(p);
    else
        throw dualcat::unknown_statement("unknown statement id '" + statement + "'");

    print_records({rec}, dualcat::verify::summarize({rec}), out_opts);
    return rec.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of dual-sequence and Catalan-number congruences"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate D, S, J2 or the Catalan inner sum");
    std::string eval_kind;
    int64_t eval_n = 0;
    std::optional<std::string> eval_x, eval_y, eval_a;
    std::string eval_mod;
    OutputOptions eval_out;
    eval_cmd->add_option("kind", eval_kind, "One of D, S, J2, catalan-inner")
        ->required()
        ->check(CLI::IsMember({"D", "S", "J2", "catalan-inner"}));
    eval_cmd->add_option("--n", eval_n, "Index n")->required();
    eval_cmd->add_option("--x", eval_x, "Rational x (e.g. -1/2)");
    eval_cmd->add_option("--y", eval_y, "Rational y");
    eval_cmd->add_option("--a", eval_a, "Rational a (catalan-inner only)");
    eval_cmd->add_option("--mod", eval_mod, "Modulus p or p^e")->required();
    add_output_options(eval_cmd, eval_out);

    // check
    auto* check_cmd = app.add_subcommand("check", "Check one statement instance");
    std::string check_statement;
    int64_t check_p = 0;
    std::map<std::string, std::optional<std::string>> check_flags = {
        {"x1", std::nullopt}, {"y1", std::nullopt}, {"x2", std::nullopt}, {"y2", std::nullopt},
        {"a", std::nullopt},  {"b", std::nullopt},  {"m", std::nullopt}};
    OutputOptions check_out;
    check_cmd
        ->add_option("statement", check_statement,
                     "One of eq1.3, eq1.4, eq1.6, eq2.3, cor2.4, cor2.5, lemma3.1, kw-p3")
        ->required();
    check_cmd->add_option("--p", check_p, "Odd prime p")->required();
    for (auto& [name, slot] : check_flags)
        check_cmd->add_option("--" + name, slot, "Rational parameter " + name);
    add_output_options(check_cmd, check_out);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep statements over a prime/parameter grid");
    std::string sweep_statements = "eq1.3,eq1.4,eq1.6,eq2.3,cor2.4,cor2.5,lemma3.1,kw-p3";
    std::string sweep_primes = "3..47";
    std::optional<std::string> sweep_x, sweep_y, sweep_a, sweep_b, sweep_m;
    bool sweep_specials = false;
    int sweep_jobs = 1;
    int64_t sweep_pcap = 500;
    OutputOptions sweep_out;
    sweep_cmd->add_option("--statements", sweep_statements, "Comma-separated statement ids")
        ->capture_default_str();
    sweep_cmd->add_option("--primes", sweep_primes, "Prime range A..B")->capture_default_str();
    sweep_cmd->add_option("--x-grid", sweep_x, "Comma-separated rationals (default 0,1,2)");
    sweep_cmd->add_option("--y-grid", sweep_y, "Comma-separated rationals (default 0,1,2,-1,-4/3)");
    sweep_cmd->add_option("--a-grid", sweep_a, "Comma-separated rationals (default -10..10)");
    sweep_cmd->add_option("--b-grid", sweep_b, "Comma-separated rationals (default -6..6)");
    sweep_cmd->add_option("--m-grid", sweep_m, "Comma-separated rationals (default -10..10)");
    sweep_cmd->add_flag("--include-rational-specials", sweep_specials,
                        "Add -1/2,-1/3,-2/3,-1/4,-3/4,-1/6 to the x grid");
    sweep_cmd->add_option("--jobs", sweep_jobs, "Worker threads")->capture_default_str();
    sweep_cmd->add_option("--p-max", sweep_pcap, "Safety cap on the prime range")
        ->capture_default_str();
    add_output_options(sweep_cmd, sweep_out);

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance criteria");
    std::string suite_level = "smoke";
    int suite_jobs = 0;
    suite_cmd->add_option("--level", suite_level, "smoke (p <= 47) or full (stated ranges)")
        ->check(CLI::IsMember({"smoke", "full"}))
        ->capture_default_str();
    suite_cmd->add_option("--jobs", suite_jobs, "Worker threads (0 = all cores)")
        ->capture_default_str();

    // telescope
    auto* tel_cmd = app.add_subcommand("telescope", "Check the telescoping identity exactly");
    int64_t tel_max_n = 60;
    OutputOptions tel_out;
    tel_cmd->add_option("--max-n", tel_max_n, "Largest n to check")->capture_default_str();
    add_output_options(tel_cmd, tel_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed())
            return run_eval(eval_kind, eval_n, eval_x, eval_y, eval_a, eval_mod, eval_out);

        if (check_cmd->parsed()) return run_check(check_statement, check_p, check_flags, check_out);

        if (sweep_cmd->parsed()) {
            dualcat::verify::SweepPlan plan;
            std::stringstream ss(sweep_statements);
            std::string id;
            while (std::getline(ss, id, ','))
                if (!id.empty()) plan.statements.push_back(id);
            for (const auto& sid : plan.statements)
                if (!dualcat::verify::is_known_statement(sid))
                    throw dualcat::unknown_statement("unknown statement id '" + sid + "'");
            std::tie(plan.p_min, plan.p_max) = parse_prime_range(sweep_primes);
            if (plan.p_max > sweep_pcap)
                throw dualcat::parse_error(
                    "prime range exceeds the cap of " + std::to_string(sweep_pcap) +
                    "; raise --p-max to confirm a long run");
            plan.x_grid = sweep_x ? parse_rational_list(*sweep_x)
                                  : std::vector<Rational>{Rational(0), Rational(1), Rational(2)};
            plan.y_grid = sweep_y ? parse_rational_list(*sweep_y)
                                  : std::vector<Rational>{Rational(0), Rational(1), Rational(2),
                                                          Rational(-1), Rational(-4, 3)};
            plan.a_grid = sweep_a ? parse_rational_list(*sweep_a) : integer_grid(-10, 10);
            plan.b_grid = sweep_b ? parse_rational_list(*sweep_b) : integer_grid(-6, 6);
            plan.m_grid = sweep_m ? parse_rational_list(*sweep_m) : integer_grid(-10, 10);
            plan.include_rational_specials = sweep_specials;
            plan.jobs = sweep_jobs;
            auto result = dualcat::verify::run_sweep(plan);
            print_records(result.records, result.summary, sweep_out);
            return result.summary.failed > 0 ? 1 : 0;
        }

        if (suite_cmd->parsed()) {
            dualcat::acceptance::Options opts;
            opts.level = suite_level == "full" ? dualcat::acceptance::Level::full
                                               : dualcat::acceptance::Level::smoke;
            opts.jobs = suite_jobs;
            auto results = dualcat::acceptance::run_all(opts, std::cout, &std::cerr);
            size_t passed = 0;
            for (const auto& r : results)
                if (r.pass) ++passed;
            const bool ok = dualcat::acceptance::all_passed(results);
            std::cout << "RESULT: " << (ok ? "PASS" : "FAIL") << " (" << passed << "/"
                      << results.size() << " criteria)\n";
            return ok ? 0 : 1;
        }

        if (tel_cmd->parsed()) {
            auto records = dualcat::verify::check_lemma_telescope(tel_max_n);
            auto summary = dualcat::verify::summarize(records);
            print_records(records, summary, tel_out);
            return summary.failed > 0 ? 1 : 0;
        }
    } catch (const dualcat::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
