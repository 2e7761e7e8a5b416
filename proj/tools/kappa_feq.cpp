/*
   Copyright 2026 The kappa-feq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: classification, lambda tables, residual identities,
// the order-reduction and elimination demos, and the sample-set checkers.
// Exit codes: 0 for success or a true verdict, 1 for a false verification
// verdict, 2 for input errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kappafeq/classification.hpp"
#include "kappafeq/diff_calculus.hpp"
#include "kappafeq/kappa4.hpp"
#include "kappafeq/parser.hpp"
#include "kappafeq/samples.hpp"

namespace {

using kappafeq::Rational;
using json = nlohmann::ordered_json;

std::vector<kappafeq::RatFunc> load_samples(const std::string& path) {
    if (path.empty()) return kappafeq::default_samples();
    std::ifstream in(path);
    if (!in) throw kappafeq::InvalidInput("cannot open sample file '" + path + "'");
    std::vector<kappafeq::RatFunc> samples;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        samples.push_back(kappafeq::parse_ratfunc(line));
    }
    if (samples.empty()) throw kappafeq::InvalidInput("sample file '" + path + "' is empty");
    return samples;
}

json identity_json(const kappafeq::IdentityCoeffs& identity) {
    json out;
    for (const auto& [j, c] : identity.coeffs) out[std::to_string(j)] = kappafeq::to_string(c);
    return out;
}

json lambda_json(const kappafeq::LambdaTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json r = json::array();
        for (const auto& lam : row) r.push_back(kappafeq::to_string(lam));
        rows.push_back(std::move(r));
    }
    return rows;
}

json bform_vec_json(const std::vector<Rational>& vec) {
    json out = json::array();
    for (const auto& c : vec) out.push_back(kappafeq::to_string(c));
    return out;
}

void emit(const json& doc, bool as_json, const std::string& text) {
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int run_classify(int n, const std::string& kappa_text, bool as_json) {
    const Rational kappa = kappafeq::rational_from_string(kappa_text);
    const kappafeq::Classification c = kappafeq::classify(n, kappa);
    emit(kappafeq::classification_to_json(c), as_json, kappafeq::classification_to_text(c));
    return 0;
}

int run_lambdas(int n, bool as_json) {
    const kappafeq::LambdaTable table = kappafeq::solve_lambda(n);
    json doc;
    doc["n"] = n;
    doc["lambda_table"] = lambda_json(table);
    emit(doc, as_json, "lambda table for n = " + std::to_string(n) + ":\n  " +
                           table.to_string() + "\n");
    return 0;
}

int run_residual(int n, bool as_json) {
    const kappafeq::LambdaTable table = kappafeq::solve_lambda(n);
    const kappafeq::IdentityCoeffs identity = kappafeq::residual_identity(n, table);
    json doc;
    doc["n"] = n;
    doc["lambda_table"] = lambda_json(table);
    doc["residual_identity"] = identity_json(identity.cleared());
    doc["text"] = identity.cleared().to_string();
    emit(doc, as_json, "residual identity for n = " + std::to_string(n) + ":\n  " +
                           identity.cleared().to_string() + "\n");
    return 0;
}

int run_reduce_n3(bool as_json) {
    const kappafeq::IdentityCoeffs input =
        kappafeq::residual_identity(3, kappafeq::solve_lambda(3));
    const kappafeq::ReduceOrderReport report = kappafeq::reduce_order_n3_report(input);
    json doc;
    doc["input"] = identity_json(report.input.cleared());
    doc["translate_difference"] = report.shifted_mix_text;
    doc["fourth_degree"] = identity_json(report.fourth_degree);
    doc["normalized"] = identity_json(report.normalized);
    std::string text = "input:      " + report.input.cleared().to_string() + "\n" +
                       "difference: " + report.shifted_mix_text + "\n" +
                       "degree 4:   " + report.fourth_degree.to_string() + "\n" +
                       "normalized: " + report.normalized.to_string() + "\n";
    emit(doc, as_json, text);
    return 0;
}

int run_kappa4(bool as_json) {
    const kappafeq::Kappa4Report report = kappafeq::kappa4_pipeline();
    json doc;
    doc["diagonal"] = report.diagonal_rep;
    doc["g"] = report.g.to_string();
    doc["eq_fourth"] = bform_vec_json(report.eq_fourth_vec);
    doc["eq_fourth2"] = bform_vec_json(report.eq_fourth2_vec);
    doc["elimination"] = json::array({kappafeq::to_string(report.elimination[0]),
                                      kappafeq::to_string(report.elimination[1])});
    doc["eliminated"] = report.eliminated.to_string();
    doc["b4_unit_trace"] = kappafeq::to_string(report.b4_unit_trace_coeff);
    doc["verdict"] = report.verdict;
    doc["log"] = report.log;
    std::string text;
    for (const auto& line : report.log) text += line + "\n";
    text += "verdict: " + report.verdict + "\n";
    emit(doc, as_json, text);
    return 0;
}

int run_verify(int n, const std::string& kappa_text, const std::string& form_text,
               const std::string& samples_path, bool as_json) {
    const Rational kappa = kappafeq::rational_from_string(kappa_text);
    const kappafeq::SymForm form = kappafeq::parse_form(form_text);
    const auto samples = load_samples(samples_path);
    const kappafeq::VerifyResult result = kappafeq::verify_solution(n, kappa, form, samples);
    json doc;
    doc["n"] = n;
    doc["kappa"] = kappafeq::to_string(kappa);
    doc["form"] = form.to_string();
    doc["holds"] = result.holds;
    doc["label"] = result.label;
    std::string text = result.label + "\n";
    if (!result.holds) {
        doc["witness"] = result.witness->to_string();
        doc["residual"] = result.residual->to_string();
        text += "witness:  x = " + result.witness->to_string() + "\n" +
                "residual: " + result.residual->to_string() + "\n";
    }
    emit(doc, as_json, text);
    return result.holds ? 0 : 1;
}

int run_order_check(const std::string& map_text, int m, const std::string& samples_path,
                    bool as_json) {
    const kappafeq::AdditiveMap map = kappafeq::parse_map(map_text);
    const auto samples = load_samples(samples_path);
    const kappafeq::OrderCertificate cert = kappafeq::order_certify(map, m, samples);
    json doc;
    doc["map"] = map.to_string();
    doc["m"] = m;
    doc["certified"] = cert.certified;
    doc["label"] = cert.certified ? "holds on sample set" : "fails on sample set";
    std::string text = std::string(cert.certified ? "order at most " + std::to_string(m) +
                                                        ": holds on sample set"
                                                  : "not of order " + std::to_string(m) +
                                                        ": fails on sample set") +
                       "\n";
    if (!cert.certified) {
        doc["witness"] = cert.witness->to_string();
        doc["residual"] = cert.residual->to_string();
        text += "witness:  x = " + cert.witness->to_string() + "\n" +
                "residual: " + cert.residual->to_string() + "\n";
    }
    emit(doc, as_json, text);
    return cert.certified ? 0 : 1;
}

int run_polar_check(const std::string& form_text, int trials, const std::string& samples_path,
                    bool as_json) {
    const kappafeq::SymForm form = kappafeq::parse_form(form_text);
    kappafeq::TrialPool pool(kappafeq::trial_seed(), load_samples(samples_path));
    const kappafeq::PolarizationResult result =
        kappafeq::polarization_check(form, trials, pool);
    json doc;
    doc["form"] = form.to_string();
    doc["trials"] = trials;
    doc["seed"] = pool.seed();
    doc["ok"] = result.ok;
    std::string text = result.ok ? "polarization identity holds on all trials\n"
                                 : "polarization identity FAILED\n";
    if (!result.ok) {
        doc["failed_trial"] = result.failed_trial;
        doc["point"] = result.point->to_string();
        json incs = json::array();
        for (const auto& y : result.increments) incs.push_back(y.to_string());
        doc["increments"] = std::move(incs);
        doc["lhs"] = result.lhs->to_string();
        doc["rhs"] = result.rhs->to_string();
        text += "trial " + std::to_string(result.failed_trial) + " at x = " +
                result.point->to_string() + "\n";
    }
    emit(doc, as_json, text);
    return result.ok ? 0 : 1;
}

int run_delta_eval(const std::string& expr_text, const std::vector<std::string>& increments,
                   bool as_json) {
    kappafeq::RatFunc value = kappafeq::parse_ratfunc(expr_text);
    json incs = json::array();
    const kappafeq::RatFunc t = kappafeq::RatFunc::variable();
    for (const auto& inc_text : increments) {
        const kappafeq::RatFunc y = kappafeq::parse_ratfunc(inc_text);
        incs.push_back(y.to_string());
        value = kappafeq::substitute(value, t + y) - value;
    }
    json doc;
    doc["expr"] = expr_text;
    doc["increments"] = std::move(incs);
    doc["result"] = value.to_string();
    emit(doc, as_json, value.to_string() + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of monomial solutions of f(x^2) = kappa * x^n * f(x)"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable report");

    int n = 1;
    int m = 1;
    int trials = 50;
    std::string kappa_text = "1";
    std::string form_text;
    std::string map_text;
    std::string expr_text;
    std::string samples_path;
    std::vector<std::string> increments;

    CLI::App* classify = app.add_subcommand("classify", "classify the (n, kappa) branch");
    classify->add_option("--n", n, "monomial degree")->required();
    classify->add_option("--kappa", kappa_text, "exact rational, e.g. 2 or 5/2")->required();

    CLI::App* lambdas = app.add_subcommand("lambdas", "lambda table of the kappa = 2 branch");
    lambdas->add_option("--n", n, "monomial degree")->required();

    CLI::App* residual = app.add_subcommand("residual", "residual identity of the kappa = 2 branch");
    residual->add_option("--n", n, "monomial degree")->required();

    app.add_subcommand("reduce-n3", "shift-difference reduction of the n = 3 residual");

    app.add_subcommand("kappa4-demo", "the n = 3, kappa = 4 elimination");

    CLI::App* verify = app.add_subcommand("verify", "check a form against the equation");
    verify->add_option("--n", n, "monomial degree")->required();
    verify->add_option("--kappa", kappa_text, "exact rational")->required();
    verify->add_option("--form", form_text, "form text, e.g. \"D({1})*D({2})*D({3})\"")->required();
    verify->add_option("--samples", samples_path, "file with one sample expression per line");

    CLI::App* order_check = app.add_subcommand("order-check", "derivation order certificate");
    order_check->add_option("--map", map_text, "map text, e.g. \"D - 1/2*D^2\"")->required();
    order_check->add_option("--m", m, "order bound to certify")->required();
    order_check->add_option("--samples", samples_path, "file with one sample expression per line");

    CLI::App* polar_check = app.add_subcommand("polar-check", "polarization identity trials");
    polar_check->add_option("--form", form_text, "form text")->required();
    polar_check->add_option("--trials", trials, "number of random tuples");
    polar_check->add_option("--samples", samples_path, "file with one sample expression per line");

    CLI::App* delta_eval = app.add_subcommand("delta-eval", "iterated difference of an expression");
    delta_eval->add_option("--expr", expr_text, "expression in t")->required();
    delta_eval->add_option("--increment", increments, "difference increment (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits cleanly, bad usage is an input error
    }

    try {
        if (classify->parsed()) return run_classify(n, kappa_text, as_json);
        if (lambdas->parsed()) return run_lambdas(n, as_json);
        if (residual->parsed()) return run_residual(n, as_json);
        if (app.get_subcommand("reduce-n3")->parsed()) return run_reduce_n3(as_json);
        if (app.get_subcommand("kappa4-demo")->parsed()) return run_kappa4(as_json);
        if (verify->parsed()) return run_verify(n, kappa_text, form_text, samples_path, as_json);
        if (order_check->parsed()) return run_order_check(map_text, m, samples_path, as_json);
        if (polar_check->parsed()) return run_polar_check(form_text, trials, samples_path, as_json);
        if (delta_eval->parsed()) return run_delta_eval(expr_text, increments, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
