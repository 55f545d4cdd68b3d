#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lumbral/baxter.hpp"
#include "lumbral/parser.hpp"
#include "lumbral/umbral.hpp"
#include "lumbral/verify.hpp"

using namespace lumbral;

namespace {

struct Config {
    std::string lambda_text = "0";
    int order = 12;
    std::string format = "text";
    std::uint64_t seed = 0;

    Rational lambda() const { return rat_parse(lambda_text); }
    bool json() const { return format == "json"; }
};

void print_series(const Config& cfg, const Series& s) {
    std::cout << (cfg.json() ? series_json(s) : series_str(s)) << "\n";
}

void print_basis(const Config& cfg, const PseudoBasis& B) {
    if (cfg.json())
        std::cout << pseudobasis_json(B) << "\n";
    else
        std::cout << pseudobasis_str(B);
}

int print_report(const Config& cfg, const VerifyReport& r) {
    std::cout << (cfg.json() ? report_json(r) : report_text(r)) << "\n";
    return r.pass ? 0 : 1;
}

int run_verify(const Config& cfg, const std::string& check, int trials, int max_box, int max_w,
               int shift, const std::string& basis_name, const std::string& f_text,
               const std::string& side_name, bool perturb) {
    const Rational lambda = cfg.lambda();
    auto basis = [&](int order) {
        if (basis_name == "monomial") {
            PseudoBasis B('x', order);
            for (int n = 0; n < order; ++n) B.rows.push_back(series_monomial('x', order, n));
            return B;
        }
        return e_lambda_basis(lambda, order);
    };
    auto tau_rows = [&](int order) {
        return tau_basis(series_parse(f_text, 't', order), lambda, order);
    };
    const EqinvSide side = side_name == "right" ? EqinvSide::Right : EqinvSide::Left;

    if (check == "baxter-axiom")
        return print_report(cfg, verify_baxter_axiom(lambda, cfg.order, trials, cfg.seed, shift));
    if (check == "divided-power")
        return print_report(cfg, verify_divided_power(tau_rows(cfg.order), lambda));
    if (check == "binomial")
        return print_report(cfg, verify_lambda_binomial(basis(cfg.order), lambda));
    if (check == "symmetry")
        return print_report(cfg, verify_binomial_symmetry(basis(cfg.order), lambda));
    if (check == "pairing-product")
        return print_report(cfg,
                            verify_pairing_product(basis(cfg.order), lambda, trials, cfg.seed));
    if (check == "shift-invariance")
        return print_report(cfg, verify_shift_invariance(lambda, cfg.order));
    if (check == "eqinv")
        return print_report(cfg, check_identity_eqinv(max_box, max_box, max_box, max_box));
    if (check == "zeilberger")
        return print_report(
            cfg, check_zeilberger_recurrence(side, max_box, max_box, max_box, max_w, perturb));
    if (check == "compatibility")
        return print_report(cfg, verify_compatibility(lambda, cfg.order));
    if (check == "ucl")
        return print_report(cfg, verify_theorem_ucl(series_parse(f_text, 't', cfg.order), lambda,
                                                    cfg.order, cfg.seed));
    if (check == "all") {
        std::vector<VerifyReport> reports;
        reports.push_back(verify_baxter_axiom(lambda, cfg.order, trials, cfg.seed, shift));
        reports.push_back(verify_lambda_binomial(basis(cfg.order), lambda));
        reports.push_back(verify_compatibility(lambda, cfg.order));
        reports.push_back(verify_divided_power(tau_rows(cfg.order), lambda));
        reports.push_back(check_identity_eqinv(max_box, max_box, max_box, max_box));
        reports.push_back(verify_pairing_product(basis(cfg.order), lambda, trials, cfg.seed));
        reports.push_back(verify_shift_invariance(lambda, cfg.order));
        reports.push_back(verify_binomial_symmetry(basis(cfg.order), lambda));
        reports.push_back(verify_theorem_ucl(series_parse(f_text, 't', cfg.order), lambda,
                                             cfg.order, cfg.seed));
        reports.push_back(check_zeilberger_recurrence(EqinvSide::Left, max_box, max_box, max_box,
                                                      max_w, false));
        reports.push_back(check_zeilberger_recurrence(EqinvSide::Right, max_box, max_box,
                                                      max_box, max_w, false));
        bool ok = true;
        if (cfg.json()) {
            std::cout << "[";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << report_json(reports[i]);
                ok = ok && reports[i].pass;
            }
            std::cout << "]\n";
        } else {
            for (const auto& r : reports) {
                std::cout << report_text(r) << "\n";
                ok = ok && r.pass;
            }
        }
        return ok ? 0 : 1;
    }
    std::cerr << "unknown check: " << check << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lambda-weighted umbral calculus over exact rationals"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--lambda", cfg.lambda_text, "weight parameter (rational p/q)")
        ->capture_default_str();
    app.add_option("--order", cfg.order, "truncation order N")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();

    std::string arg_a, arg_b, f_text = "t", u_text, p_text, mode = "lambda";
    int row = -1, k_index = 0, n_index = 0;
    int trials = 50, max_box = 12, max_w = 8, shift = 1;
    std::string basis_name = "e", side_name = "left", check, op_name;
    bool perturb = false;

    auto* product = app.add_subcommand("product", "multiply two elements of the free algebra");
    product->add_option("a", arg_a, "first factor, e.g. u1 or 2*u1+u2")->required();
    product->add_option("b", arg_b, "second factor")->required();

    auto* tau = app.add_subcommand("tau", "divided-power rows tau_n(f)");
    tau->add_option("--f", f_text, "delta series in t")->capture_default_str();
    tau->add_option("--row", row, "print a single row");

    auto* assoc = app.add_subcommand("assoc", "associated sequence of a delta series");
    assoc->add_option("--f", f_text, "delta series in t")->capture_default_str();

    auto* pair = app.add_subcommand("pair", "evaluate a pairing");
    pair->add_option("--u", u_text, "functional: u-literal (lambda mode) or series in t "
                                    "(classical mode)")
        ->required();
    pair->add_option("--p", p_text, "series in x")->required();
    pair->add_option("--mode", mode, "pairing flavor")
        ->check(CLI::IsMember({"lambda", "classical"}))
        ->capture_default_str();

    auto* action = app.add_subcommand("action", "apply the functional u_k to a series");
    action->add_option("--k", k_index, "functional index")->required();
    action->add_option("--p", p_text, "series in x")->required();

    auto* coproduct = app.add_subcommand("coproduct", "coproduct table of a reference row");
    coproduct->add_option("--n", n_index, "row index")->required();

    auto* verify = app.add_subcommand("verify", "run an identity check");
    verify->add_option("check", check,
                       "one of: baxter-axiom, divided-power, binomial, symmetry, "
                       "pairing-product, shift-invariance, eqinv, zeilberger, compatibility, "
                       "ucl, all")
        ->required();
    verify->add_option("--trials", trials, "random trials")->capture_default_str();
    verify->add_option("--max", max_box, "index box bound for eqinv/zeilberger")
        ->capture_default_str();
    verify->add_option("--max-w", max_w, "w bound for zeilberger")->capture_default_str();
    verify->add_option("--shift", shift, "operator shift; 2 is a failing control")
        ->capture_default_str();
    verify->add_option("--op", op_name,
                       "operator variant for baxter-axiom: shift1 (default) or shift2 "
                       "(failing control)")
        ->check(CLI::IsMember({"shift1", "shift2", "shift3"}));
    verify->add_option("--basis", basis_name, "e (reference) or monomial (failing control)")
        ->check(CLI::IsMember({"e", "monomial"}))
        ->capture_default_str();
    verify->add_option("--f", f_text, "delta series for divided-power/ucl")
        ->capture_default_str();
    verify->add_option("--side", side_name, "which side of the identity")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    verify->add_flag("--perturb", perturb, "perturb the summand (failing control)");

    // global flags may appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Rational lambda = cfg.lambda();
        if (product->parsed()) {
            BaxterElement a = baxter_parse(arg_a, lambda, cfg.order);
            BaxterElement b = baxter_parse(arg_b, lambda, cfg.order);
            BaxterElement p = baxter_product(a, b);
            std::cout << (cfg.json() ? baxter_json(p) : baxter_str(p)) << "\n";
            return 0;
        }
        if (tau->parsed()) {
            PseudoBasis B = tau_basis(series_parse(f_text, 't', cfg.order), lambda, cfg.order);
            if (row >= 0) {
                if (row >= cfg.order) throw std::invalid_argument("row exceeds order");
                print_series(cfg, B.row(row));
            } else {
                print_basis(cfg, B);
            }
            return 0;
        }
        if (assoc->parsed()) {
            print_basis(cfg, associated_sequence(series_parse(f_text, 't', cfg.order), lambda,
                                                 cfg.order));
            return 0;
        }
        if (pair->parsed()) {
            const Series p = series_parse(p_text, 'x', cfg.order);
            Rational v;
            if (mode == "classical") {
                v = pair_classical(series_parse(u_text, 't', cfg.order), p);
            } else {
                BaxterElement u = baxter_parse(u_text, lambda, cfg.order);
                v = pair_lambda(u, p, e_lambda_basis(lambda, cfg.order));
            }
            std::cout << rat_str(v) << "\n";
            return 0;
        }
        if (action->parsed()) {
            const PseudoBasis q = e_lambda_basis(lambda, cfg.order);
            print_series(cfg, u_action(k_index, series_parse(p_text, 'x', cfg.order), q, lambda));
            return 0;
        }
        if (coproduct->parsed()) {
            const auto table = coproduct_matrix(n_index, lambda, cfg.order);
            if (cfg.json()) {
                std::cout << "[";
                for (std::size_t a = 0; a < table.size(); ++a) {
                    if (a) std::cout << ", ";
                    std::cout << "[";
                    for (std::size_t b = 0; b < table[a].size(); ++b) {
                        if (b) std::cout << ", ";
                        std::cout << "\"" << rat_str(table[a][b]) << "\"";
                    }
                    std::cout << "]";
                }
                std::cout << "]\n";
            } else {
                for (std::size_t a = 0; a < table.size(); ++a)
                    for (std::size_t b = 0; b < table[a].size(); ++b)
                        if (table[a][b] != 0)
                            std::cout << "c[" << a << "][" << b
                                      << "] = " << rat_str(table[a][b]) << "\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            if (!op_name.empty()) shift = op_name.back() - '0';
            return run_verify(cfg, check, trials, max_box, max_w, shift, basis_name, f_text,
                              side_name, perturb);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
