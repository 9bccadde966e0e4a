// partq: exact partition counts, q-series expansions and identity
// verification from the command line.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "partq/checks.hpp"
#include "partq/counting.hpp"
#include "partq/named_series.hpp"
#include "partq/report_io.hpp"

namespace {

using partq::Int;

struct OutputOpts {
    std::string format = "tsv";
    std::string out;
};

void add_output_flags(CLI::App* cmd, OutputOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "Write output to a file instead of stdout");
}

int emit(const OutputOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(opts.out);
    if (!f) {
        std::cerr << "error: cannot open output file " << opts.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string rows_to_tsv(const std::string& key_header,
                        const std::vector<std::pair<long, Int>>& rows) {
    std::ostringstream os;
    os << key_header << "\tcount\n";
    for (const auto& [n, v] : rows) os << n << "\t" << v.get_str() << "\n";
    return os.str();
}

std::string rows_to_json(const std::string& name,
                         const std::map<std::string, long>& params,
                         const std::string& key_name,
                         const std::vector<std::pair<long, Int>>& rows) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["name"] = name;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [n, v] : rows) {
        nlohmann::ordered_json e;
        e[key_name] = n;
        e["count"] = v.get_str();
        out.push_back(e);
    }
    j["rows"] = out;
    return j.dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partq: exact partition counting and truncated q-series toolkit"};
    app.require_subcommand(1);

    // ---- count ----
    auto* count = app.add_subcommand("count", "Evaluate a counting function");
    std::string count_name;
    count->add_option("name", count_name,
                      "M | N | p_restricted | overline_p_restricted | pp_e | M_nu | mu_bar | "
                      "MP | p | overline_p | pod | p_o | pp")
        ->required();
    std::optional<int> c_a, c_m, c_nu;
    std::optional<long> c_n;
    std::optional<long> c_n_max;
    std::string c_carrier = "all";
    OutputOpts count_out;
    count->add_option("--a", c_a, "Residue a");
    count->add_option("--m", c_m, "Modulus m");
    count->add_option("--nu", c_nu, "Durfee offset parameter");
    count->add_option("--n", c_n, "Single weight n");
    count->add_option("--n-max", c_n_max, "Report all weights 0..n-max");
    count->add_option("--carrier", c_carrier, "Carrier class for p_restricted")
        ->check(CLI::IsMember({"all", "odd", "not2mod4"}));
    add_output_flags(count, count_out);

    // ---- series ----
    auto* series = app.add_subcommand("series", "Expand a named series");
    std::string series_name;
    series->add_option("name", series_name,
                       "p | overline_p | pod | p_o | pp | phi_neg | psi_neg | euler_product | "
                       "rhs_M | rhs_N")
        ->required();
    int s_order = 20;
    std::optional<int> s_a, s_m, s_nu;
    OutputOpts series_out;
    series->add_option("--order", s_order, "Highest exponent retained")->capture_default_str();
    series->add_option("--a", s_a, "Residue a (rhs_M)");
    series->add_option("--m", s_m, "Modulus m (rhs_M)");
    series->add_option("--nu", s_nu, "nu (rhs_M, rhs_N)");
    add_output_flags(series, series_out);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "Run one identity/inequality check");
    std::string verify_id;
    verify->add_option("id", verify_id, "Check id (run with an unknown id to list the registry)")
        ->required();
    std::optional<int> v_nu, v_m, v_order;
    OutputOpts verify_out;
    verify->add_option("--nu", v_nu, "nu parameter (default 1)");
    verify->add_option("--m", v_m, "m parameter (l1 only, default 0)");
    verify->add_option("--order", v_order, "Verification order (defaults per check)");
    add_output_flags(verify, verify_out);

    // ---- scan ----
    auto* scan = app.add_subcommand("scan", "Scan the conjectured bound for counterexamples");
    std::string scan_id = "co1";
    scan->add_option("id", scan_id, "Scan id (co1)")->required();
    int sc_nu_max = 3;
    std::optional<int> sc_order;
    OutputOpts scan_out;
    scan->add_option("--nu-max", sc_nu_max, "Scan nu = 1..nu_max")->capture_default_str();
    scan->add_option("--order", sc_order, "Scan weights 0..order (default 120)");
    add_output_flags(scan, scan_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) {
            if (!c_n && !c_n_max) {
                std::cerr << "error: count requires --n or --n-max\n";
                return 2;
            }
            const long lo = c_n ? *c_n : 0;
            const long hi = c_n ? *c_n : *c_n_max;
            if (lo < 0 || hi < lo) {
                std::cerr << "error: invalid weight range\n";
                return 2;
            }
            std::map<std::string, long> params;
            const auto need = [&](const std::optional<int>& v, const char* flag) {
                if (!v) throw std::invalid_argument(std::string("missing required flag --") + flag);
                return *v;
            };
            std::vector<std::pair<long, Int>> rows;
            const auto fill = [&](auto&& f) {
                for (long n = lo; n <= hi; ++n) rows.emplace_back(n, f(n));
            };
            if (count_name == "M") {
                const int a = need(c_a, "a"), m = need(c_m, "m"), nu = need(c_nu, "nu");
                params = {{"a", a}, {"m", m}, {"nu", nu}};
                fill([&](long n) { return partq::count_M(a, m, nu, n); });
            } else if (count_name == "N") {
                const int nu = need(c_nu, "nu");
                params = {{"nu", nu}};
                fill([&](long n) { return partq::count_N(nu, n); });
            } else if (count_name == "p_restricted") {
                const int a = need(c_a, "a"), m = need(c_m, "m"), nu = need(c_nu, "nu");
                const auto carrier = partq::parse_carrier(c_carrier);
                params = {{"a", a}, {"m", m}, {"nu", nu}};
                fill([&](long n) { return partq::count_p_restricted_enum(a, m, nu, n, carrier); });
            } else if (count_name == "overline_p_restricted") {
                const int nu = need(c_nu, "nu");
                params = {{"nu", nu}};
                fill([&](long n) { return partq::count_overline_p_restricted(nu, n); });
            } else if (count_name == "pp_e") {
                const int nu = need(c_nu, "nu");
                params = {{"nu", nu}};
                const auto table = partq::count_pp_e_table(nu, static_cast<int>(hi));
                fill([&](long n) { return table[static_cast<size_t>(n)]; });
            } else if (count_name == "M_nu") {
                const int nu = need(c_nu, "nu");
                params = {{"nu", nu}};
                const auto table = partq::count_M_nu_table(nu, static_cast<int>(hi));
                fill([&](long n) { return table[static_cast<size_t>(n)]; });
            } else if (count_name == "mu_bar") {
                const int nu = need(c_nu, "nu");
                params = {{"nu", nu}};
                fill([&](long n) { return partq::count_mu_bar(nu, n); });
            } else if (count_name == "MP") {
                const int nu = need(c_nu, "nu");
                params = {{"nu", nu}};
                fill([&](long n) { return partq::count_MP(nu, n); });
            } else {
                const auto basic = partq::parse_basic_name(count_name);
                const auto table = partq::count_basic_table(basic, static_cast<int>(hi));
                fill([&](long n) { return table[static_cast<size_t>(n)]; });
            }
            const std::string text =
                count_out.format == "json"
                    ? rows_to_json(count_name, params, "n", rows)
                    : rows_to_tsv("n", rows);
            return emit(count_out, text);
        }

        if (series->parsed()) {
            if (s_order < 0) {
                std::cerr << "error: order must be >= 0\n";
                return 2;
            }
            partq::TruncatedSeries s(0);
            if (series_name == "phi_neg") {
                s = partq::phi_neg(s_order);
            } else if (series_name == "psi_neg") {
                s = partq::psi_neg(s_order);
            } else if (series_name == "euler_product") {
                s = partq::euler_product(s_order);
            } else if (series_name == "rhs_M") {
                if (!s_a || !s_m || !s_nu)
                    throw std::invalid_argument("rhs_M requires --a, --m and --nu");
                s = partq::rhs_M_series(*s_a, *s_m, *s_nu, s_order);
            } else if (series_name == "rhs_N") {
                if (!s_nu) throw std::invalid_argument("rhs_N requires --nu");
                s = partq::rhs_N_series(*s_nu, s_order);
            } else {
                s = partq::gen(partq::parse_gen_name(series_name), s_order);
            }
            std::vector<std::pair<long, Int>> rows;
            for (int k = 0; k <= s.order(); ++k) rows.emplace_back(k, s.coeff(k));
            std::map<std::string, long> params = {{"order", s_order}};
            if (s_a) params["a"] = *s_a;
            if (s_m) params["m"] = *s_m;
            if (s_nu) params["nu"] = *s_nu;
            std::ostringstream tsv;
            tsv << "exponent\tcoefficient\n";
            for (const auto& [k, v] : rows) tsv << k << "\t" << v.get_str() << "\n";
            const std::string text = series_out.format == "json"
                                         ? rows_to_json(series_name, params, "exponent", rows)
                                         : tsv.str();
            return emit(series_out, text);
        }

        if (verify->parsed()) {
            partq::CheckParams params;
            params.nu = v_nu;
            params.m = v_m;
            params.order = v_order;
            const partq::CheckReport report = partq::run_check(verify_id, params);
            const std::string text = verify_out.format == "json"
                                         ? partq::report_to_json(report)
                                         : partq::report_to_tsv(report);
            if (const int rc = emit(verify_out, text); rc != 0) return rc;
            return report.pass() ? 0 : 1;
        }

        if (scan->parsed()) {
            if (scan_id != "co1") {
                std::cerr << "error: unknown scan id '" << scan_id << "' (known: co1)\n";
                return 2;
            }
            const partq::CheckReport report =
                partq::scan_conjecture_co1(sc_nu_max, sc_order.value_or(partq::kScanOrder));
            const std::string text = scan_out.format == "json"
                                         ? partq::report_to_json(report)
                                         : partq::report_to_tsv(report);
            if (const int rc = emit(scan_out, text); rc != 0) return rc;
            return 0;   // findings are reported, never a failing exit
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }

    return 2;
}
