// Command-line front end: inversion, verification, classification of
// normalized permutation polynomials, the Table 1 catalog, and the binomial
// congruence reports.
//
// Exit codes: 0 success, 1 verification failure, 2 not a permutation,
// 3 method inapplicable, 4 size exceeded.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ppinv/binom.hpp"
#include "ppinv/closed_forms.hpp"
#include "ppinv/text.hpp"

namespace {

using namespace ppinv;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitNotPermutation = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitSizeExceeded = 4;

int exit_code_for(Errc c) {
    switch (c) {
    case Errc::not_a_permutation: return kExitNotPermutation;
    case Errc::size_exceeded: return kExitSizeExceeded;
    default: return kExitInapplicable;
    }
}

int cmd_invert(const std::string& field_text, const std::string& poly_text, const std::string& method) {
    FieldPtr f = parse_field(field_text);
    Poly poly = parse_poly(*f, poly_text);

    InverseResult r = [&] {
        if (method == "auto") return invert_auto(poly);
        if (method == "lagrange") return invert_lagrange(poly);
        if (method == "coeff-formula") {
            if (!is_permutation(poly)) fail(Errc::not_a_permutation, "polynomial does not permute the field");
            return invert_coeff_formula_shifted(poly);
        }
        const std::string prefix = "closed-form:";
        if (method.rfind(prefix, 0) == 0) return invert_closed_form(poly, method.substr(prefix.size()));
        fail(Errc::invalid_argument, "unknown method '" + method + "'");
    }();

    std::cout << "inverse: " << r.inverse << "\n";
    std::cout << "method: " << r.method_string() << "\n";
    std::cout << "verified: " << (r.verified ? "true" : "false") << "\n";
    return r.verified ? 0 : kExitVerifyFailed;
}

int cmd_verify(const std::string& field_text, const std::string& poly_text, const std::string& inverse_text) {
    FieldPtr f = parse_field(field_text);
    Poly poly = parse_poly(*f, poly_text);
    Poly inv = parse_poly(*f, inverse_text);
    bool ok = verify_inverse(poly, inv);
    std::cout << "verified: " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : kExitVerifyFailed;
}

int cmd_classify(const std::string& field_text, u32 max_degree) {
    FieldPtr f = parse_field(field_text);
    auto pps = classify_normalized_pps(*f, max_degree);
    for (const auto& p : pps) std::cout << p << "\n";
    std::cout << "count: " << pps.size() << "\n";
    return 0;
}

int cmd_catalog_list(const std::string& field_text) {
    FieldPtr f;
    if (!field_text.empty()) f = parse_field(field_text);
    for (const auto& row : table1_catalog()) {
        std::cout << row.id << "  |  " << row.pattern << "  |  " << row.condition;
        if (f) std::cout << "  |  " << (row.field_admissible(*f) ? "admissible" : "not admissible");
        std::cout << "\n";
    }
    return 0;
}

int cmd_catalog_instantiate(const std::string& field_text, const std::string& row_id,
                            const std::vector<std::string>& param_args) {
    FieldPtr f = parse_field(field_text);
    const Table1Row* row = table1_find(row_id);
    if (!row) fail(Errc::invalid_argument, "unknown catalog row '" + row_id + "'");
    if (!row->field_admissible(*f))
        fail(Errc::invalid_argument, "row " + row_id + " is not applicable over " + to_string(*f));

    std::map<std::string, std::string> named;
    for (const auto& arg : param_args) {
        auto eq = arg.find('=');
        if (eq == std::string::npos) fail(Errc::parse_error, "--param expects name=value");
        named[arg.substr(0, eq)] = arg.substr(eq + 1);
    }
    static const char* const names[] = {"a", "b"};
    std::vector<FieldElement> params;
    for (u32 i = 0; i < row->num_params; ++i) {
        auto it = named.find(names[i]);
        if (it == named.end())
            fail(Errc::invalid_argument, std::string("row needs --param ") + names[i] + "=<element>");
        params.push_back(parse_element(*f, it->second));
        named.erase(it);
    }
    if (!named.empty()) fail(Errc::invalid_argument, "unexpected parameter '" + named.begin()->first + "'");
    if (!row->params_admissible(*f, params))
        fail(Errc::not_a_permutation, "parameters do not satisfy the row condition");

    Poly pp = row->build_pp(*f, params);
    Poly inv = row->build_inverse(*f, params);
    bool ok = verify_inverse(pp, inv);
    std::cout << "pp: " << pp << "\n";
    std::cout << "inverse: " << inv << "\n";
    std::cout << "verified: " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : kExitVerifyFailed;
}

int cmd_congruence(u32 n) {
    if (n < 1 || n > 5) fail(Errc::size_exceeded, "congruence reports support 1 <= n <= 5");
    Report a = congruence_suite(n);
    Report b = theorem_predicate_equivalences(n);
    std::cout << a.to_text() << b.to_text();
    bool ok = a.all_pass() && b.all_pass();
    std::cout << (ok ? "all-pass" : "FAILURES") << "\n";
    return ok ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compositional inverses of permutation polynomials over finite fields"};
    app.require_subcommand(1);

    std::string field_text, poly_text, inverse_text, row_id;
    std::string method = "auto";
    std::vector<std::string> param_args;
    u32 max_degree = 5;
    u32 congruence_n = 2;

    auto* invert = app.add_subcommand("invert", "Invert a permutation polynomial");
    invert->add_option("--field", field_text, "field as p^n, e.g. 5^2")->required();
    invert->add_option("--poly", poly_text, "dense low-to-high coefficients, e.g. 0,0,0,1")->required();
    invert->add_option("--method", method, "auto | lagrange | coeff-formula | closed-form:<row-id>");

    auto* verify = app.add_subcommand("verify", "Check g(f(c)) = c for every c");
    verify->add_option("--field", field_text)->required();
    verify->add_option("--poly", poly_text)->required();
    verify->add_option("--inverse", inverse_text)->required();

    auto* classify = app.add_subcommand("classify", "List all normalized permutation polynomials");
    classify->add_option("--field", field_text)->required();
    classify->add_option("--max-degree", max_degree, "degrees 1..7")->required();

    auto* catalog = app.add_subcommand("catalog", "The catalog of normalized PPs of degree <= 5");
    catalog->add_option("--field", field_text, "report admissibility / instantiate over this field");
    catalog->add_option("--instantiate", row_id, "row id, e.g. table1.x5-2ax3-a2x");
    catalog->add_option("--param", param_args, "row parameter, e.g. a=2 or b=[0,1]");

    auto* congruence = app.add_subcommand("congruence", "Binomial congruence reports for q = 5^n");
    congruence->add_option("--n", congruence_n, "extension degree, 1..5")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (invert->parsed()) return cmd_invert(field_text, poly_text, method);
        if (verify->parsed()) return cmd_verify(field_text, poly_text, inverse_text);
        if (classify->parsed()) return cmd_classify(field_text, max_degree);
        if (catalog->parsed()) {
            if (!row_id.empty()) {
                if (field_text.empty())
                    fail(Errc::invalid_argument, "--instantiate needs --field");
                return cmd_catalog_instantiate(field_text, row_id, param_args);
            }
            return cmd_catalog_list(field_text);
        }
        if (congruence->parsed()) return cmd_congruence(congruence_n);
    } catch (const ppinv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInapplicable;
    }
    return 0;
}
