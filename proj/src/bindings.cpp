#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "dualcat/acceptance.hpp"
#include "dualcat/modring.hpp"
#include "dualcat/oracle.hpp"
#include "dualcat/sequences.hpp"
#include "dualcat/verify.hpp"

namespace py = pybind11;

namespace {

using dualcat::BinomialTables;
using dualcat::Modulus;
using dualcat::Rational;

// Accepts int (arbitrary precision), "num/den" strings, and anything whose
// str() is a rational literal (fractions.Fraction prints as num/den).
Rational to_rational(const py::object& obj) {
    return Rational::parse(py::str(obj).cast<std::string>());
}

Modulus to_modulus(const py::object& obj) {
    if (py::isinstance<py::int_>(obj)) return Modulus(obj.cast<int64_t>(), 1);
    return Modulus::parse(py::str(obj).cast<std::string>());
}

std::vector<Rational> to_rational_list(const std::vector<py::object>& items) {
    std::vector<Rational> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(to_rational(item));
    return out;
}

py::dict record_to_dict(const dualcat::verify::VerificationRecord& rec) {
    py::dict params;
    for (const auto& [name, value] : rec.params) params[py::str(name)] = value.str();
    py::dict d;
    d["statement"] = rec.statement;
    d["p"] = rec.p;
    d["e"] = rec.e;
    d["params"] = std::move(params);
    d["lhs"] = rec.lhs;
    d["rhs"] = rec.rhs;
    d["pass"] = rec.pass;
    d["skip_reason"] = rec.skipped() ? py::object(py::str(rec.skip_reason)) : py::none();
    return d;
}

std::vector<std::pair<std::string, Rational>> to_params(const py::dict& params) {
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& item : params)
        out.emplace_back(item.first.cast<std::string>(), to_rational(item.second.cast<py::object>()));
    return out;
}

Rational named(const py::dict& params, const char* name) {
    if (!params.contains(name))
        throw dualcat::parse_error(std::string("missing parameter '") + name + "'");
    return to_rational(params[name]);
}

dualcat::verify::VerificationRecord run_check(const std::string& statement, int64_t p,
                                              const py::dict& params) {
    using namespace dualcat::verify;
    if (statement == "eq1.3")
        return check_thm_D(p, named(params, "x1"), named(params, "y1"), named(params, "x2"),
                           named(params, "y2"));
    if (statement == "eq1.4")
        return check_thm_S(p, named(params, "x1"), named(params, "y1"), named(params, "x2"),
                           named(params, "y2"));
    if (statement == "eq1.6") return check_thm_catalan(p, named(params, "a"));
    if (statement == "eq2.3") return check_cor_ab(p, named(params, "a"), named(params, "b"));
    if (statement == "cor2.4")
        return check_cor_halves_thirds(p, named(params, "a"), named(params, "b"));
    if (statement == "cor2.5") return check_cor_34(p, named(params, "a"), named(params, "b"));
    if (statement == "lemma3.1") return check_lemma_catalan(p, named(params, "m"));
    if (statement == "kw-p3") return check_kw_mod_p3(p);
    throw dualcat::unknown_statement("unknown statement id '" + statement + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact congruence checks for dual-sequence polynomials and Catalan sums";

    py::register_exception<dualcat::error>(m, "DualcatError");

    m.def("is_prime", [](uint64_t n) { return dualcat::is_prime(n); }, py::arg("n"));

    m.def(
        "least_residue",
        [](const py::object& x, int64_t p) { return dualcat::least_residue(to_rational(x), p); },
        py::arg("x"), py::arg("p"));

    m.def(
        "legendre",
        [](const py::object& a, int64_t p) { return dualcat::legendre(to_rational(a), p); },
        py::arg("a"), py::arg("p"));

    m.def(
        "binom_mod",
        [](const py::object& x, int64_t k, const py::object& mod) {
            return dualcat::binom(to_rational(x), k, to_modulus(mod)).value();
        },
        py::arg("x"), py::arg("k"), py::arg("mod"));

    m.def(
        "reduce_mod",
        [](const py::object& q, const py::object& mod) {
            return dualcat::oracle::reduce(to_rational(q), to_modulus(mod)).value();
        },
        py::arg("q"), py::arg("mod"));

    // fast-path evaluation
    m.def(
        "eval_d",
        [](int64_t n, const py::object& x, const py::object& y, const py::object& mod) {
            BinomialTables t(to_modulus(mod));
            return dualcat::d_eval(n, to_rational(x), to_rational(y), t).value();
        },
        py::arg("n"), py::arg("x"), py::arg("y"), py::arg("mod"));
    m.def(
        "eval_d_ljunggren",
        [](int64_t n, const py::object& x, const py::object& y, const py::object& mod) {
            BinomialTables t(to_modulus(mod));
            return dualcat::d_eval_ljunggren(n, to_rational(x), to_rational(y), t).value();
        },
        py::arg("n"), py::arg("x"), py::arg("y"), py::arg("mod"));
    m.def(
        "eval_s",
        [](int64_t n, const py::object& x, const py::object& y, const py::object& mod) {
            BinomialTables t(to_modulus(mod));
            return dualcat::s_eval(n, to_rational(x), to_rational(y), t).value();
        },
        py::arg("n"), py::arg("x"), py::arg("y"), py::arg("mod"));
    m.def(
        "eval_j2",
        [](int64_t n, const py::object& mod) {
            BinomialTables t(to_modulus(mod));
            return dualcat::j2_eval(n, t).value();
        },
        py::arg("n"), py::arg("mod"));
    m.def(
        "eval_catalan_inner",
        [](int64_t n, const py::object& a, const py::object& mod) {
            BinomialTables t(to_modulus(mod));
            return dualcat::catalan_inner(n, to_rational(a), t).value();
        },
        py::arg("n"), py::arg("a"), py::arg("mod"));

    m.def(
        "dual_transform",
        [](const std::vector<py::object>& seq, int64_t n) {
            return dualcat::dual_transform(to_rational_list(seq), n).str();
        },
        py::arg("seq"), py::arg("n"));

    // exact oracle
    m.def(
        "exact_d",
        [](int64_t n, const py::object& x, const py::object& y) {
            return dualcat::oracle::exact_d(n, to_rational(x), to_rational(y)).str();
        },
        py::arg("n"), py::arg("x"), py::arg("y"));
    m.def(
        "exact_s",
        [](int64_t n, const py::object& x, const py::object& y) {
            return dualcat::oracle::exact_s(n, to_rational(x), to_rational(y)).str();
        },
        py::arg("n"), py::arg("x"), py::arg("y"));
    m.def(
        "exact_j2", [](int64_t n) { return dualcat::oracle::exact_j2(n).str(); }, py::arg("n"));
    m.def(
        "exact_catalan_inner",
        [](int64_t n, const py::object& a) {
            return dualcat::oracle::exact_catalan_inner(n, to_rational(a)).str();
        },
        py::arg("n"), py::arg("a"));
    m.def(
        "exact_binom",
        [](const py::object& x, int64_t k) {
            return dualcat::oracle::exact_binom(to_rational(x), k).str();
        },
        py::arg("x"), py::arg("k"));
    m.def(
        "exact_catalan",
        [](int64_t k) { return dualcat::oracle::exact_catalan(k).get_str(); }, py::arg("k"));
    m.def(
        "exact_statement_lhs",
        [](const std::string& statement, int64_t p, const py::dict& params) {
            return dualcat::oracle::exact_theorem_lhs(statement, p, to_params(params)).str();
        },
        py::arg("statement"), py::arg("p"), py::arg("params") = py::dict());

    // verification
    m.def("statement_ids", [] { return dualcat::verify::statement_ids(); });
    m.def(
        "check",
        [](const std::string& statement, int64_t p, const py::dict& params) {
            return record_to_dict(run_check(statement, p, params));
        },
        py::arg("statement"), py::arg("p"), py::arg("params") = py::dict());

    m.def(
        "sweep",
        [](const std::vector<std::string>& statements, int64_t p_min, int64_t p_max,
           const std::vector<py::object>& x_grid, const std::vector<py::object>& y_grid,
           const std::vector<py::object>& a_grid, const std::vector<py::object>& b_grid,
           const std::vector<py::object>& m_grid, bool include_rational_specials, int jobs) {
            dualcat::verify::SweepPlan plan;
            plan.statements = statements;
            plan.p_min = p_min;
            plan.p_max = p_max;
            plan.x_grid = to_rational_list(x_grid);
            plan.y_grid = to_rational_list(y_grid);
            plan.a_grid = to_rational_list(a_grid);
            plan.b_grid = to_rational_list(b_grid);
            plan.m_grid = to_rational_list(m_grid);
            plan.include_rational_specials = include_rational_specials;
            plan.jobs = jobs;
            auto result = dualcat::verify::run_sweep(plan);
            py::list records;
            for (const auto& rec : result.records) records.append(record_to_dict(rec));
            py::dict summary;
            summary["passed"] = result.summary.passed;
            summary["failed"] = result.summary.failed;
            summary["skipped"] = result.summary.skipped;
            py::dict out;
            out["records"] = std::move(records);
            out["summary"] = std::move(summary);
            return out;
        },
        py::arg("statements"), py::arg("p_min") = 3, py::arg("p_max") = 47,
        py::arg("x_grid") = std::vector<py::object>(), py::arg("y_grid") = std::vector<py::object>(),
        py::arg("a_grid") = std::vector<py::object>(), py::arg("b_grid") = std::vector<py::object>(),
        py::arg("m_grid") = std::vector<py::object>(),
        py::arg("include_rational_specials") = false, py::arg("jobs") = 1);

    m.def(
        "telescope",
        [](int64_t n_max) {
            py::list records;
            for (const auto& rec : dualcat::verify::check_lemma_telescope(n_max))
                records.append(record_to_dict(rec));
            return records;
        },
        py::arg("n_max"));

    m.attr("__version__") = "0.1.0";
}
