/*
 * Command-line front end: quantum products of eta-theta classes on
 * symmetric products of curves.
 *
 * Subcommands: product, gw, verify, table, info.  Exit codes: 0 success,
 * 1 usage or validation error, 2 result contains unknown coefficients.
 */

#include "symq/symq.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace symq;

// Default truncation: 5 covers every nonzero order for d >= g-1; below
// that the hyperbola bound (d-3)/(g-1-d) caps the nonzero orders, so its
// ceiling (clamped to >= 1) is enough.
long default_qmax(const Ambient& amb) {
    if (amb.d >= amb.g - 1)
        return 5;
    const long num = amb.d - 3;
    const long den = amb.g - 1 - amb.d;
    if (num < den)
        return 1;
    return (num + den - 1) / den;
}

int cmd_product(const Ambient& amb, long u, long v, long qmax,
                const std::string& format) {
    const QClass prod = qprod_eta(u, v, amb, qmax);
    if (format == "json")
        std::cout << product_json(prod, u, v).dump(2) << "\n";
    else
        std::cout << render_qclass(prod) << "\n";
    return prod.has_unknown() ? 2 : 0;
}

int cmd_gw(const Ambient& amb, long u, long v, long w, long e) {
    const std::optional<Rational> val = gw_e(u, v, w, e, amb);
    std::cout << render_insertion(u, v, w, e, amb) << " = "
              << (val ? to_string(*val) : std::string("unknown")) << "\n";
    return val ? 0 : 2;
}

int cmd_info(const Ambient& amb) {
    const RegimeReport rep = regime(amb);
    std::cout << "g = " << amb.g << ", d = " << amb.d << "\n";
    std::cout << "deg q = " << rep.deg_q << "\n";
    std::cout << "rho(1) = " << to_string(brill_noether_rho(amb, 1))
              << ", rho(2) = " << to_string(brill_noether_rho(amb, 2))
              << "\n";
    if (rep.hyperbola_bound)
        std::cout << "hyperbola bound = " << to_string(*rep.hyperbola_bound)
                  << "\n";
    else
        std::cout << "hyperbola bound = infinite\n";
    std::cout << "regime = " << to_string(rep.cls) << "\n";
    std::cout << "known orders: " << rep.known_orders << "\n";
    return 0;
}

int cmd_table(const Ambient& amb, long max_total, long qmax,
              const std::string& format) {
    const TableDocument doc = build_table(amb, max_total, qmax);
    if (format == "json")
        std::cout << table_to_json(doc).dump(2) << "\n";
    else
        std::cout << table_to_csv(doc);
    for (const auto& row : doc.rows)
        if (row.product.has_unknown())
            return 2;
    return 0;
}

// ---- verify suites ------------------------------------------------------

struct SuiteState {
    long checks = 0;
    long failures = 0;
};

std::string point_tag(const char* suite, const Ambient& amb) {
    return std::string(suite) + " g=" + std::to_string(amb.g) +
           " d=" + std::to_string(amb.d);
}

void run_assoc_point(const Ambient& amb, long trunc, SuiteState& st) {
    const AssocReport rep = verify_associativity(amb, trunc, 3);
    st.checks += rep.checked;
    if (rep.ok) {
        std::cout << point_tag("assoc", amb) << ": ok (" << rep.checked
                  << " triples)\n";
        return;
    }
    ++st.failures;
    const auto& c = *rep.counterexample;
    std::cout << point_tag("assoc", amb) << ": FAIL u=" << c[0]
              << " v=" << c[1] << " w=" << c[2] << "\n";
}

void run_relations_point(const Ambient& amb, long trunc, SuiteState& st) {
    long checks = 0;
    std::vector<std::string> fails;
    const auto check = [&](bool ok, const std::string& label) {
        ++checks;
        if (!ok)
            fails.push_back(label);
    };
    for (long u = 0; u <= amb.d + 1; ++u) {
        const std::string su = " u=" + std::to_string(u);
        if (amb.d > amb.g)
            check(verify_w_identity(u, WIdentityCase::I, amb, trunc),
                  "w(i)" + su);
        if (amb.d == amb.g)
            check(verify_w_identity(u, WIdentityCase::II, amb, trunc),
                  "w(ii)" + su);
        if (amb.d == amb.g - 1)
            check(verify_w_identity(u, WIdentityCase::III, amb, trunc),
                  "w(iii)" + su);
        if (2 * amb.d > amb.g && amb.d <= amb.g - 1)
            check(verify_w_identity(u, WIdentityCase::IV, amb, trunc),
                  "w(iv)" + su);
    }
    if (amb.d > 2 * amb.g - 2 && amb.d > amb.g)
        check(verify_y_relation(YRelationCase::I, amb, trunc), "y(i)");
    if (amb.d > amb.g && amb.d <= 2 * amb.g - 2)
        check(verify_y_relation(YRelationCase::II, amb, trunc), "y(ii)");
    if (amb.d == amb.g)
        check(verify_y_relation(YRelationCase::III, amb, trunc), "y(iii)");
    st.checks += checks;
    if (checks == 0)
        return;
    if (fails.empty()) {
        std::cout << point_tag("relations", amb) << ": ok (" << checks
                  << " checks)\n";
        return;
    }
    st.failures += static_cast<long>(fails.size());
    std::string joined;
    for (const auto& f : fails)
        joined += (joined.empty() ? "" : "; ") + f;
    std::cout << point_tag("relations", amb) << ": FAIL " << joined << "\n";
}

void run_oracle_point(const Ambient& amb, SuiteState& st) {
    long checks = 0;
    std::vector<std::string> fails;
    const auto tag = [](long u, long v, long w, int deg) {
        return "gw" + std::to_string(deg) + "(" + std::to_string(u) + "," +
               std::to_string(v) + "," + std::to_string(w) + ")";
    };
    for (long u = 0; u + 0 <= amb.d + 3; ++u)
        for (long v = 0; u + v <= amb.d + 3; ++v)
            for (long w = 0; u + v + w <= amb.d + 3; ++w) {
                ++checks;
                if (gw1(u, v, w, amb) != gw1_oracle(u, v, w, amb))
                    fails.push_back(tag(u, v, w, 1));
                if (amb.d <= amb.g - 1) {
                    ++checks;
                    if (gw2(u, v, w, amb) != gw2_oracle(u, v, w, amb))
                        fails.push_back(tag(u, v, w, 2));
                }
            }
    st.checks += checks;
    if (fails.empty()) {
        std::cout << point_tag("oracle", amb) << ": ok (" << checks
                  << " checks)\n";
        return;
    }
    st.failures += static_cast<long>(fails.size());
    std::cout << point_tag("oracle", amb) << ": FAIL " << fails.front()
              << " (+" << fails.size() - 1 << " more)\n";
}

void run_grading_point(const Ambient& amb, long qmax, SuiteState& st) {
    long checks = 0;
    std::vector<std::string> fails;
    for (long u = 1; u + 1 <= amb.d + 3; ++u)
        for (long v = 1; u + v <= amb.d + 3; ++v) {
            const QClass prod = qprod_eta(u, v, amb, qmax);
            for (long e = 0; e <= qmax; ++e) {
                if (!prod.known(e))
                    continue;
                ++checks;
                const auto deg = prod.order(e).homogeneous_degree();
                if (deg && *deg != u + v - e * q_degree(amb))
                    fails.push_back("u=" + std::to_string(u) +
                                    " v=" + std::to_string(v) +
                                    " e=" + std::to_string(e));
            }
        }
    st.checks += checks;
    if (fails.empty()) {
        std::cout << point_tag("grading", amb) << ": ok (" << checks
                  << " checks)\n";
        return;
    }
    st.failures += static_cast<long>(fails.size());
    std::cout << point_tag("grading", amb) << ": FAIL " << fails.front()
              << " (+" << fails.size() - 1 << " more)\n";
}

int cmd_verify(const std::string& suite, std::optional<Ambient> only,
               long gmax, std::optional<long> qmax_flag) {
    SuiteState st;
    const auto points = [&](long dmax_of_g_mult, long dmax_of_g_add,
                            bool skip_window) {
        std::vector<Ambient> out;
        if (only) {
            out.push_back(*only);
            return out;
        }
        for (long g = 0; g <= gmax; ++g)
            for (long d = 1; d <= dmax_of_g_mult * g + dmax_of_g_add; ++d) {
                const Ambient amb(g, d);
                if (skip_window && in_open_window(amb))
                    continue;
                out.push_back(amb);
            }
        return out;
    };
    const bool do_all = suite == "all";
    if (do_all || suite == "oracle")
        for (const Ambient& amb : points(1, 2, false))
            run_oracle_point(amb, st);
    if (do_all || suite == "grading")
        for (const Ambient& amb : points(1, 2, false))
            run_grading_point(amb, qmax_flag.value_or(default_qmax(amb)), st);
    if (do_all || suite == "relations")
        for (const Ambient& amb : points(2, 1, false))
            run_relations_point(amb, qmax_flag.value_or(amb.g + 3), st);
    if (do_all || suite == "assoc")
        for (const Ambient& amb : points(2, 3, true))
            run_assoc_point(amb, qmax_flag.value_or(default_qmax(amb)), st);
    if (st.failures == 0) {
        std::cout << "verify: PASS (" << st.checks << " checks)\n";
        return 0;
    }
    std::cout << "verify: FAIL (" << st.failures << " of " << st.checks
              << " checks failed)\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum products of eta-theta classes on symmetric "
                 "products of curves"};
    app.require_subcommand(1);

    long g = 0, d = 1, u = 0, v = 0, w = 0, e = 1;
    long qmax = -1, max_total = 2, gmax = 6;
    std::string product_format = "text";
    std::string table_format = "csv";
    std::string suite;

    CLI::App* prod = app.add_subcommand(
        "product", "Compute eta^u * eta^v as a q-expansion of classes");
    prod->add_option("--g", g, "Genus")->required()->check(
        CLI::NonNegativeNumber);
    prod->add_option("--d", d, "Symmetric-product degree")
        ->required()
        ->check(CLI::PositiveNumber);
    prod->add_option("--u", u, "First eta-exponent")
        ->required()
        ->check(CLI::NonNegativeNumber);
    prod->add_option("--v", v, "Second eta-exponent")
        ->required()
        ->check(CLI::NonNegativeNumber);
    prod->add_option("--qmax", qmax, "Truncation order (default regime-dependent)")
        ->check(CLI::PositiveNumber);
    prod->add_option("--format", product_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* gw = app.add_subcommand(
        "gw", "Evaluate the 3-point invariant <eta^u, eta^v, theta^t eta^w>_e");
    gw->add_option("--g", g, "Genus")->required()->check(
        CLI::NonNegativeNumber);
    gw->add_option("--d", d, "Symmetric-product degree")
        ->required()
        ->check(CLI::PositiveNumber);
    gw->add_option("--e", e, "Curve degree (q-power)")
        ->required()
        ->check(CLI::PositiveNumber);
    gw->add_option("--u", u, "First eta-exponent")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gw->add_option("--v", v, "Second eta-exponent")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gw->add_option("--w", w, "Third-slot eta-exponent")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run invariant suites (assoc, relations, oracle, grading, all)");
    verify->add_option("--suite", suite, "Suite to run")
        ->required()
        ->check(CLI::IsMember({"assoc", "relations", "oracle", "grading", "all"}));
    verify->add_option("--g", g, "Restrict to one genus (with --d)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--d", d, "Restrict to one degree (with --g)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--gmax", gmax, "Sweep bound on the genus")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--qmax", qmax, "Truncation order override")
        ->check(CLI::PositiveNumber);

    CLI::App* table = app.add_subcommand(
        "table", "Emit the product table eta^u * eta^v for u+v <= max");
    table->add_option("--g", g, "Genus")->required()->check(
        CLI::NonNegativeNumber);
    table->add_option("--d", d, "Symmetric-product degree")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--max", max_total, "Bound on u+v")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--qmax", qmax, "Truncation order (default regime-dependent)")
        ->check(CLI::PositiveNumber);
    table->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* info = app.add_subcommand(
        "info", "Report grading, expected dimensions, and regime");
    info->add_option("--g", g, "Genus")->required()->check(
        CLI::NonNegativeNumber);
    info->add_option("--d", d, "Symmetric-product degree")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (prod->parsed()) {
            const Ambient amb(g, d);
            return cmd_product(amb, u, v, qmax > 0 ? qmax : default_qmax(amb),
                               product_format);
        }
        if (gw->parsed()) {
            return cmd_gw(Ambient(g, d), u, v, w, e);
        }
        if (verify->parsed()) {
            const bool has_g = verify->count("--g") > 0;
            const bool has_d = verify->count("--d") > 0;
            if (has_g != has_d) {
                std::cerr << "verify: --g and --d must be given together\n";
                return 1;
            }
            std::optional<Ambient> only;
            if (has_g)
                only = Ambient(g, d);
            std::optional<long> qflag;
            if (verify->count("--qmax") > 0)
                qflag = qmax;
            return cmd_verify(suite, only, gmax, qflag);
        }
        if (table->parsed()) {
            const Ambient amb(g, d);
            return cmd_table(amb, max_total,
                             qmax > 0 ? qmax : default_qmax(amb), table_format);
        }
        if (info->parsed()) {
            return cmd_info(Ambient(g, d));
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
