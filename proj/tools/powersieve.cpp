#include <chrono>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "psv/atlas.hpp"
#include "psv/farey.hpp"
#include "psv/meanvalue.hpp"
#include "psv/sieve_operator.hpp"
#include "psv/verify.hpp"
#include "psv/waring.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
    int jobs = 1;
    double tol = 1e-6;
    bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out_path, "Output path (default: stdout)");
    cmd->add_option("--jobs", opts.jobs, "Worker count (results are identical for any value)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", opts.tol, "Relative tolerance override");
    cmd->add_flag("--no-timestamp", opts.no_timestamp, "Suppress the timestamp field");
}

std::string timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(opts.out_path);
        if (!f) throw std::runtime_error("cannot open " + opts.out_path);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

void emit_json(const CommonOpts& opts, json j) {
    if (!opts.no_timestamp) j["generated_at"] = timestamp();
    emit(opts, j.dump(2));
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::int64_t> parse_set(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

// ---- farey ----------------------------------------------------------------

int run_farey(const CommonOpts& opts, std::int64_t Q, std::int64_t x, int k,
              bool count_only, bool spacing, const std::string& delta_str,
              const std::string& alpha0_str, int s) {
    using namespace psv;
    const bool dyadic = x > 0;
    farey::FareySet set = dyadic ? farey::gen_dyadic_set(x, k) : farey::gen_farey_set(Q, k);
    if (count_only) {
        emit(opts, std::to_string(set.size()));
        return 0;
    }
    json j;
    j["mode"] = dyadic ? "dyadic" : "full";
    j[dyadic ? "x" : "Q"] = set.param;
    j["k"] = k;
    j["size"] = set.size();
    if (spacing && set.size() >= 2) j["min_spacing"] = farey::min_spacing(set).str();
    if (!delta_str.empty()) {
        Rational delta = parse_rational(delta_str);
        auto slash = alpha0_str.find('/');
        if (slash == std::string::npos)
            throw CLI::ValidationError("--alpha0", "expected a/q0 with x/2 < q0 <= x");
        std::int64_t a0 = std::stoll(alpha0_str.substr(0, slash));
        std::int64_t q0 = std::stoll(alpha0_str.substr(slash + 1));
        farey::ShortIntervalQuery query{set.param, k, delta, {a0, q0, k}};
        j["delta"] = delta.str();
        j["alpha0"] = alpha0_str;
        j["short_interval_count"] = farey::short_interval_count(query);
        auto a_star = farey::gen_A_star(set.param, k, delta, a0, q0);
        j["a_star"] = a_star;
        if (s >= 1) j["b_star"] = farey::gen_B_star(set.param, k, s, delta, a0, q0);
    }
    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "a,q,k\n";
        for (const auto& pf : set.elems) csv << pf.a << ',' << pf.q << ',' << pf.k << '\n';
        emit(opts, csv.str());
        return 0;
    }
    json elems = json::array();
    for (const auto& pf : set.elems) elems.push_back({{"a", pf.a}, {"q", pf.q}, {"k", pf.k}});
    j["elements"] = elems;
    emit_json(opts, j);
    return 0;
}

// ---- waring ---------------------------------------------------------------

int run_waring(const CommonOpts& opts, std::int64_t n, int k, int s,
               std::int64_t sup_limit, bool two_divisor, int q_max) {
    using namespace psv;
    json j;
    j["k"] = k;
    j["s"] = s;
    if (sup_limit > 0) {
        auto [best_n, best] = waring::sup_rep_count(sup_limit, k, s, opts.jobs);
        j["limit"] = sup_limit;
        j["argmax_n"] = best_n;
        j["max_count"] = best;
        if (opts.format == "csv") {
            emit(opts, "limit,k,s,argmax_n,max_count\n" + std::to_string(sup_limit) + "," +
                           std::to_string(k) + "," + std::to_string(s) + "," +
                           std::to_string(best_n) + "," + std::to_string(best));
            return 0;
        }
        emit_json(opts, j);
        return 0;
    }
    std::int64_t count =
        two_divisor ? waring::rep_count_two_divisor(n, k) : waring::rep_count(n, k, s);
    j["n"] = n;
    j["count"] = count;
    if (q_max > 0) {
        auto ss = waring::singular_series(n, k, s, q_max);
        j["q_max"] = q_max;
        j["value"] = ss.value;
        j["gamma_factor"] = ss.gamma_factor;
        j["imag_residue"] = ss.imag_residue;
        if (s >= k + 1) j["prediction"] = waring::hl_predicted_density(n, k, s, q_max);
    }
    if (opts.format == "csv") {
        emit(opts, "n,k,s,count\n" + std::to_string(n) + "," + std::to_string(k) + "," +
                       std::to_string(s) + "," + std::to_string(count));
        return 0;
    }
    emit_json(opts, j);
    return 0;
}

// ---- meanvalue ------------------------------------------------------------

int run_meanvalue(const CommonOpts& opts, const std::string& set_csv, std::int64_t Q, int k,
                  int s, int t) {
    using namespace psv;
    std::vector<std::int64_t> A;
    if (!set_csv.empty()) {
        A = parse_set(set_csv);
    } else {
        for (std::int64_t v = 1; v <= Q; ++v) A.push_back(v);
    }
    if (t > 0) {
        int sys_s = t * (t + 1) / 2;
        auto rep = meanvalue::fiber_statistics(A, k, sys_s, t);
        if (opts.format == "csv") {
            std::ostringstream csv;
            csv << "ell,R,B,sumV2\n";
            for (const auto& row : rep.rows)
                csv << psv::to_string(row.ell) << ',' << psv::to_string(row.R) << ','
                    << psv::to_string(row.B) << ',' << psv::to_string(row.sumV2) << '\n';
            emit(opts, csv.str());
            return 0;
        }
        json j;
        j["A"] = A;
        j["k"] = k;
        j["t"] = t;
        j["s"] = sys_s;
        j["vinogradov_count"] = psv::to_string(meanvalue::vinogradov_partial_count(A, k, t));
        j["mean_value_count"] = psv::to_string(rep.sum_R2);
        j["max_fiber_keys"] = psv::to_string(rep.max_B);
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"ell", psv::to_string(row.ell)},
                            {"R", psv::to_string(row.R)},
                            {"B", psv::to_string(row.B)},
                            {"sumV2", psv::to_string(row.sumV2)}});
        j["fibers"] = rows;
        emit_json(opts, j);
        return 0;
    }
    i128 count = meanvalue::mean_value_count(A, k, s);
    json j;
    j["A"] = A;
    j["k"] = k;
    j["s"] = s;
    j["count"] = psv::to_string(count);
    if (opts.format == "csv") {
        emit(opts, "k,s,count\n" + std::to_string(k) + "," + std::to_string(s) + "," +
                       psv::to_string(count));
        return 0;
    }
    emit_json(opts, j);
    return 0;
}

// ---- delta ----------------------------------------------------------------

int run_delta(const CommonOpts& opts, std::int64_t Q, int k, int N) {
    auto est = psv::sieve::delta_exact(Q, k, N, opts.tol);
    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "Q,k,N,lambda_max,residual,iterations\n"
            << Q << ',' << k << ',' << N << ',' << est.lambda_max << ',' << est.residual
            << ',' << est.iterations;
        emit(opts, csv.str());
        return 0;
    }
    json j;
    j["Q"] = Q;
    j["k"] = k;
    j["N"] = N;
    j["lambda_max"] = est.lambda_max;
    j["residual"] = est.residual;
    j["iterations"] = est.iterations;
    j["converged"] = est.converged;
    j["witness_spike"] = est.witness_spike;
    j["witness_phase"] = est.witness_phase;
    j["upper_trivial_1"] = est.upper_trivial_1;
    j["upper_trivial_2"] = est.upper_trivial_2;
    emit_json(opts, j);
    return 0;
}

// ---- atlas ----------------------------------------------------------------

int run_atlas(const CommonOpts& opts, int k, const std::string& challenger_name,
              const std::string& grid_spec, bool claims, bool plot) {
    using namespace psv::atlas;
    if (claims) {
        auto results = claims_check(k);
        if (opts.format == "csv") {
            std::ostringstream csv;
            csv << "claim,pass,computed,expected\n";
            for (const auto& c : results)
                csv << csv_quote(c.name) << ',' << (c.pass ? "true" : "false") << ','
                    << c.computed << ',' << c.expected << '\n';
            emit(opts, csv.str());
        } else {
            json j;
            j["k"] = k;
            json arr = json::array();
            for (const auto& c : results)
                arr.push_back({{"claim", c.name},
                               {"pass", c.pass},
                               {"computed", c.computed},
                               {"expected", c.expected},
                               {"detail", c.detail}});
            j["claims"] = arr;
            emit_json(opts, j);
        }
        for (const auto& c : results)
            if (!c.pass) return 1;
        return 0;
    }

    Challenger challenger = challenger_name == "thm2_whole"
                                ? challenger_thm2_whole(k)
                            : challenger_name.rfind("thm2:", 0) == 0
                                ? challenger_thm2(k, std::stoi(challenger_name.substr(5)))
                                : challenger_bound(bound_from_name(challenger_name), k);

    double lo = k, hi = 2.0 * k, step = 0.01;
    if (!grid_spec.empty()) {
        std::stringstream ss(grid_spec);
        std::string part;
        std::vector<double> parts;
        while (std::getline(ss, part, ':')) parts.push_back(std::stod(part));
        if (parts.size() != 3 || parts[0] >= parts[1] || parts[2] <= 0)
            throw CLI::ValidationError("--grid", "expected lo:hi:step, monotone");
        lo = parts[0];
        hi = parts[1];
        step = parts[2];
    }
    auto report = dominance_scan(k, lo, hi, step, challenger, field_for(k));

    if (plot) {
        std::ostringstream out;
        for (const auto& row : report.rows)
            out << row.lambda << ' ' << row.winner_exponent << ' '
                << row.challenger_exponent << '\n';
        emit(opts, out.str());
        return 0;
    }
    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "lambda,winner,winner_exponent,challenger_exponent\n";
        for (const auto& row : report.rows)
            csv << row.lambda << ',' << bound_name(row.winner) << ',' << row.winner_exponent
                << ',' << row.challenger_exponent << '\n';
        emit(opts, csv.str());
        return 0;
    }
    json j;
    j["k"] = k;
    j["challenger"] = report.challenger;
    json intervals = json::array();
    for (const auto& [a, b] : report.beat_intervals) intervals.push_back({a, b});
    j["beat_intervals"] = intervals;
    j["beat_fraction"] = report.beat_fraction;
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"lambda", row.lambda},
                        {"winner", bound_name(row.winner)},
                        {"winner_exponent", row.winner_exponent},
                        {"challenger_exponent", row.challenger_exponent},
                        {"beats", row.challenger_beats},
                        {"near_tie", row.near_tie}});
    j["rows"] = rows;
    emit_json(opts, j);
    return 0;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const CommonOpts& opts, const std::string& suite) {
    std::vector<psv::verify::VerifyReport> reports;
    if (suite == "all")
        reports = psv::verify::verify_all();
    else
        reports.push_back(psv::verify::verify_suite(suite));

    bool all_pass = true;
    std::ostringstream text;
    json j;
    json arr = json::array();
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) {
            all_pass = all_pass && c.pass;
            text << (c.pass ? "PASS" : "FAIL") << ' ' << rep.suite << '.' << c.name;
            if (!c.detail.empty()) text << "  (" << c.detail << ')';
            text << '\n';
            arr.push_back({{"suite", rep.suite},
                           {"check", c.name},
                           {"pass", c.pass},
                           {"detail", c.detail}});
        }
    }
    if (opts.format == "json" && !opts.out_path.empty()) {
        j["checks"] = arr;
        j["all_pass"] = all_pass;
        emit_json(opts, j);
    } else {
        emit(opts, text.str());
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale verifier for large sieve inequalities with k-th power moduli"};
    app.require_subcommand(1);
    CommonOpts opts;

    // farey
    std::int64_t f_Q = 0, f_x = 0;
    int f_k = 2, f_s = 0;
    bool f_count = false, f_spacing = false;
    std::string f_delta, f_alpha0;
    auto* farey_cmd = app.add_subcommand("farey", "Farey sets with power moduli");
    farey_cmd->add_option("--Q", f_Q, "Full-set parameter Q");
    farey_cmd->add_option("--x", f_x, "Dyadic parameter x (q in (x/2, x])");
    farey_cmd->add_option("--k", f_k, "Power k")->required();
    farey_cmd->add_flag("--count-only", f_count, "Print only the cardinality");
    farey_cmd->add_flag("--spacing", f_spacing, "Include the exact minimum spacing");
    farey_cmd->add_option("--delta", f_delta, "Short-interval radius as p/q");
    farey_cmd->add_option("--alpha0", f_alpha0, "Interval center a0/q0");
    farey_cmd->add_option("--s", f_s, "Also emit B* for this s");
    add_common(farey_cmd, opts);

    // waring
    std::int64_t w_n = 0, w_sup = 0;
    int w_k = 3, w_s = 2, w_qmax = 0;
    bool w_div = false;
    auto* waring_cmd = app.add_subcommand("waring", "Representation counts R_{k,s}(n)");
    waring_cmd->add_option("--n", w_n, "Target integer");
    waring_cmd->add_option("--k", w_k, "Power k")->required();
    waring_cmd->add_option("--s", w_s, "Number of summands");
    waring_cmd->add_option("--sup-limit", w_sup, "Scan n <= limit for the maximum");
    waring_cmd->add_flag("--two-divisor", w_div, "Use the divisor algorithm (s = 2)");
    waring_cmd->add_option("--qmax", w_qmax, "Truncated singular series bound");
    add_common(waring_cmd, opts);

    // meanvalue
    std::string m_set;
    std::int64_t m_Q = 0;
    int m_k = 2, m_s = 2, m_t = 0;
    auto* mv_cmd = app.add_subcommand("meanvalue", "Mean-value solution counts");
    mv_cmd->add_option("--A", m_set, "Comma-separated set of positive integers");
    mv_cmd->add_option("--Q", m_Q, "Use A = {1..Q}");
    mv_cmd->add_option("--k", m_k, "Power k")->required();
    mv_cmd->add_option("--s", m_s, "Summands per side");
    mv_cmd->add_option("--t", m_t, "Partial Vinogradov parameter (emits fibers)");
    add_common(mv_cmd, opts);

    // delta
    std::int64_t d_Q = 2;
    int d_k = 2, d_N = 16;
    auto* delta_cmd = app.add_subcommand("delta", "Sieve constant as an operator norm");
    delta_cmd->add_option("--Q", d_Q, "Modulus bound Q")->required();
    delta_cmd->add_option("--k", d_k, "Power k")->required();
    delta_cmd->add_option("--N", d_N, "Window length N")->required();
    add_common(delta_cmd, opts);

    // atlas
    int a_k = 5;
    std::string a_challenger = "corollary", a_grid;
    bool a_claims = false, a_plot = false;
    auto* atlas_cmd = app.add_subcommand("atlas", "Exponent comparison under N = Q^lambda");
    atlas_cmd->add_option("--k", a_k, "Power k")->required();
    atlas_cmd->add_option("--challenger", a_challenger,
                          "Bound name, thm2:t, or thm2_whole");
    atlas_cmd->add_option("--grid", a_grid, "lambda grid lo:hi:step");
    atlas_cmd->add_flag("--claims", a_claims, "Run the published comparison claims");
    atlas_cmd->add_flag("--plot", a_plot, "Two-column dump for plotting");
    add_common(atlas_cmd, opts);

    // verify
    std::string v_suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run module invariants");
    verify_cmd->add_option("--suite", v_suite, "farey|waring|meanvalue|sieve|atlas|all")
        ->check(CLI::IsMember({"farey", "waring", "meanvalue", "sieve", "atlas", "all"}));
    add_common(verify_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (farey_cmd->parsed()) {
            if ((f_Q > 0) == (f_x > 0))
                throw CLI::ValidationError("farey", "exactly one of --Q or --x is required");
            return run_farey(opts, f_Q, f_x, f_k, f_count, f_spacing, f_delta, f_alpha0, f_s);
        }
        if (waring_cmd->parsed()) return run_waring(opts, w_n, w_k, w_s, w_sup, w_div, w_qmax);
        if (mv_cmd->parsed()) return run_meanvalue(opts, m_set, m_Q, m_k, m_s, m_t);
        if (delta_cmd->parsed()) return run_delta(opts, d_Q, d_k, d_N);
        if (atlas_cmd->parsed())
            return run_atlas(opts, a_k, a_challenger, a_grid, a_claims, a_plot);
        if (verify_cmd->parsed()) return run_verify(opts, v_suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
