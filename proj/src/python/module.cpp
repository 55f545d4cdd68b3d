#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lumbral/baxter.hpp"
#include "lumbral/parser.hpp"
#include "lumbral/umbral.hpp"
#include "lumbral/verify.hpp"

namespace py = pybind11;
using namespace lumbral;

namespace {

// Rationals cross the boundary as "p/q" strings so no precision is lost.
std::vector<std::string> series_coeffs(const Series& s) {
    std::vector<std::string> out;
    out.reserve(s.coeffs.size());
    for (const auto& c : s.coeffs) out.push_back(rat_str(c));
    return out;
}

py::dict report_dict(const VerifyReport& r) {
    py::dict d;
    d["name"] = r.name;
    py::dict params;
    for (const auto& [k, v] : r.params) params[py::str(k)] = v;
    d["params"] = params;
    d["status"] = r.pass ? "pass" : "fail";
    if (r.has_counterexample) {
        py::dict ce;
        ce["indices"] = r.indices;
        ce["lhs"] = r.lhs;
        ce["rhs"] = r.rhs;
        d["counterexample"] = ce;
    } else {
        d["counterexample"] = py::none();
    }
    if (!r.note.empty()) d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "weighted umbral calculus over exact rationals";

    m.def(
        "product",
        [](const std::string& a, const std::string& b, const std::string& lam, int order) {
            const Rational lambda = rat_parse(lam);
            return baxter_str(baxter_product(baxter_parse(a, lambda, order),
                                             baxter_parse(b, lambda, order)));
        },
        py::arg("a"), py::arg("b"), py::arg("lam") = "0", py::arg("order") = 12);

    m.def(
        "eval_series",
        [](const std::string& text, const std::string& var, int order) {
            return series_coeffs(series_parse(text, var.empty() ? 't' : var[0], order));
        },
        py::arg("text"), py::arg("var") = "t", py::arg("order") = 12);

    m.def(
        "tau_row",
        [](const std::string& f, int n, const std::string& lam, int order) {
            const Rational lambda = rat_parse(lam);
            return series_coeffs(
                tau_basis(series_parse(f, 't', order), lambda, order).row(n));
        },
        py::arg("f"), py::arg("n"), py::arg("lam") = "0", py::arg("order") = 12);

    m.def(
        "assoc",
        [](const std::string& f, const std::string& lam, int order) {
            const Rational lambda = rat_parse(lam);
            const PseudoBasis B =
                associated_sequence(series_parse(f, 't', order), lambda, order);
            std::vector<std::vector<std::string>> rows;
            rows.reserve(B.rows.size());
            for (const auto& r : B.rows) rows.push_back(series_coeffs(r));
            return rows;
        },
        py::arg("f"), py::arg("lam") = "0", py::arg("order") = 12);

    m.def(
        "pair",
        [](const std::string& u, const std::string& p, const std::string& mode,
           const std::string& lam, int order) {
            const Rational lambda = rat_parse(lam);
            const Series px = series_parse(p, 'x', order);
            if (mode == "classical")
                return rat_str(pair_classical(series_parse(u, 't', order), px));
            return rat_str(
                pair_lambda(baxter_parse(u, lambda, order), px, e_lambda_basis(lambda, order)));
        },
        py::arg("u"), py::arg("p"), py::arg("mode") = "lambda", py::arg("lam") = "0",
        py::arg("order") = 12);

    m.def(
        "action",
        [](int k, const std::string& p, const std::string& lam, int order) {
            const Rational lambda = rat_parse(lam);
            return series_coeffs(u_action(k, series_parse(p, 'x', order),
                                          e_lambda_basis(lambda, order), lambda));
        },
        py::arg("k"), py::arg("p"), py::arg("lam") = "0", py::arg("order") = 12);

    m.def(
        "coproduct",
        [](int n, const std::string& lam, int order) {
            const auto table = coproduct_matrix(n, rat_parse(lam), order);
            std::vector<std::vector<std::string>> out;
            out.reserve(table.size());
            for (const auto& row : table) {
                std::vector<std::string> r;
                r.reserve(row.size());
                for (const auto& c : row) r.push_back(rat_str(c));
                out.push_back(std::move(r));
            }
            return out;
        },
        py::arg("n"), py::arg("lam") = "0", py::arg("order") = 12);

    m.def(
        "verify",
        [](const std::string& check, const std::string& lam, int order, int trials,
           std::uint64_t seed, const std::string& f) {
            const Rational lambda = rat_parse(lam);
            if (check == "baxter-axiom")
                return report_dict(verify_baxter_axiom(lambda, order, trials, seed));
            if (check == "divided-power")
                return report_dict(verify_divided_power(
                    tau_basis(series_parse(f, 't', order), lambda, order), lambda));
            if (check == "binomial")
                return report_dict(verify_lambda_binomial(e_lambda_basis(lambda, order), lambda));
            if (check == "symmetry")
                return report_dict(
                    verify_binomial_symmetry(e_lambda_basis(lambda, order), lambda));
            if (check == "pairing-product")
                return report_dict(verify_pairing_product(e_lambda_basis(lambda, order), lambda,
                                                          trials, seed));
            if (check == "shift-invariance")
                return report_dict(verify_shift_invariance(lambda, order));
            if (check == "eqinv") return report_dict(check_identity_eqinv(12, 12, 12, 12));
            if (check == "zeilberger")
                return report_dict(
                    check_zeilberger_recurrence(EqinvSide::Left, 10, 10, 10, 8));
            if (check == "compatibility")
                return report_dict(verify_compatibility(lambda, order));
            if (check == "ucl")
                return report_dict(
                    verify_theorem_ucl(series_parse(f, 't', order), lambda, order, seed));
            throw std::invalid_argument("unknown check: " + check);
        },
        py::arg("check"), py::arg("lam") = "0", py::arg("order") = 12, py::arg("trials") = 50,
        py::arg("seed") = 0, py::arg("f") = "t");
}
