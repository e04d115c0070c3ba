#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainspec/chain_matrix.hpp"
#include "chainspec/cmatrix.hpp"
#include "chainspec/degree_sequence.hpp"
#include "chainspec/enumeration.hpp"
#include "chainspec/errors.hpp"
#include "chainspec/extremal_search.hpp"
#include "chainspec/ferrers.hpp"
#include "chainspec/rational.hpp"
#include "chainspec/report_json.hpp"
#include "chainspec/second_compound.hpp"
#include "chainspec/spectra.hpp"

namespace chainspec::cli {

enum class Format { text, json, csv };

struct RunConfig {
    std::string command;
    Format format = Format::text;
    std::string degrees;
    std::optional<long long> e;
    std::optional<int> r;
    std::optional<int> p;
    std::optional<int> q;
    std::optional<long long> k;
    std::string mode = "integer";
    std::optional<int> n_min;
    std::optional<int> n_max;
    double tolerance = 1e-9;
};

// Thrown when the user asks for --help; carries the text to print.
struct help_requested {
    std::string text;
};

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw usage_error("unknown format '" + s + "' (expected text, json or csv)");
}

inline RunConfig parse_args(std::vector<std::string> args) {
    RunConfig cfg;
    std::string fmt = "text";

    CLI::App app{"spectral extremal toolkit for bipartite chain graphs", "chainspec"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", fmt, "output format: text, json or csv");
        sub->add_option("--tolerance", cfg.tolerance, "strictness tolerance (default 1e-9)");
    };

    CLI::App* lambda = app.add_subcommand("lambda", "largest eigenvalue of the chain graph of a degree sequence");
    lambda->add_option("--degrees", cfg.degrees, "comma-separated positive degrees")->required();
    add_common(lambda);

    CLI::App* bounds = app.add_subcommand("bounds", "all spectral bounds for the chain graph of a degree sequence");
    bounds->add_option("--degrees", cfg.degrees, "comma-separated positive degrees")->required();
    add_common(bounds);

    CLI::App* momega = app.add_subcommand("min-omega", "minimize omega over two-block profiles");
    momega->add_option("--e", cfg.e, "edge count");
    momega->add_option("--r", cfg.r, "side bound r >= 2");
    momega->add_option("--p", cfg.p, "left frame bound");
    momega->add_option("--q", cfg.q, "right frame bound");
    momega->add_option("--k", cfg.k, "family parameter for mode e3k1 (e = 3k+1)");
    momega->add_option("--mode", cfg.mode, "integer (default), continuous, or e3k1");
    add_common(momega);

    CLI::App* vconj = app.add_subcommand("verify-conjecture", "rank all candidate chains in a frame and check the extremal claim");
    vconj->add_option("--p", cfg.p, "left side size")->required();
    vconj->add_option("--q", cfg.q, "right side size")->required();
    vconj->add_option("--e", cfg.e, "edge count")->required();
    add_common(vconj);

    CLI::App* vdom = app.add_subcommand("verify-dominance", "exhaustively confirm the chain pattern maximizes sigma1 for fixed row sums");
    vdom->add_option("--degrees", cfg.degrees, "comma-separated positive degrees")->required();
    vdom->add_option("--n-min", cfg.n_min, "smallest column count")->required();
    vdom->add_option("--n-max", cfg.n_max, "largest column count")->required();
    add_common(vdom);

    CLI::App* enu = app.add_subcommand("enumerate", "list candidate degree sequences for a frame, spectrally ranked");
    enu->add_option("--p", cfg.p, "left side size")->required();
    enu->add_option("--q", cfg.q, "right side size")->required();
    enu->add_option("--e", cfg.e, "edge count")->required();
    add_common(enu);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw help_requested{app.help()};
    } catch (const CLI::ParseError& err) {
        throw usage_error(err.what());
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = parse_format(fmt);
    if (!(cfg.tolerance > 0)) throw usage_error("--tolerance must be positive");
    if (cfg.mode != "integer" && cfg.mode != "continuous" && cfg.mode != "e3k1")
        throw usage_error("unknown --mode '" + cfg.mode + "'");
    return cfg;
}

// ---------------------------------------------------------------------------
// Report assembly shared by the commands.

struct Check {
    std::string name;
    std::string status; // "pass", "fail", "info", "skipped", "indistinguishable"
    std::optional<double> margin;
};

inline bool any_failure(const std::vector<Check>& checks) {
    for (const Check& c : checks)
        if (c.status == "fail" || c.status == "indistinguishable") return true;
    return false;
}

inline json checks_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const Check& c : checks) {
        json e;
        e["name"] = c.name;
        e["status"] = c.status;
        e["margin"] = c.margin ? json(*c.margin) : json(nullptr);
        arr.push_back(e);
    }
    return arr;
}

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline void render_checks_text(const std::vector<Check>& checks, std::ostream& out) {
    if (checks.empty()) return;
    out << "checks:\n";
    for (const Check& c : checks) {
        out << "  [" << c.status << "] " << c.name;
        if (c.margin) out << "  margin=" << fmt_double(*c.margin);
        out << "\n";
    }
}

inline void render_kv_text(const json& obj, std::ostream& out, int indent = 2) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        out << std::string(static_cast<std::size_t>(indent), ' ') << it.key() << ": ";
        const json& v = it.value();
        if (v.is_string())
            out << v.get_ref<const std::string&>();
        else if (v.is_number_float())
            out << fmt_double(v.get<double>());
        else if (v.is_null())
            out << "-";
        else if (v.is_boolean())
            out << (v.get<bool>() ? "yes" : "no");
        else
            out << v.dump();
        out << "\n";
    }
}

inline json ranking_entry(const CandidateEval& c) {
    json e;
    e["degrees"] = c.degrees.str();
    e["h"] = c.h;
    e["lambda_max"] = c.lambda_max;
    e["lambda_sq"] = c.lambda_sq;
    e["omega_star"] = c.omega_star_value.str();
    e["upper_bound"] = c.upper_bound;
    return e;
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

inline void render_ranking_csv(const std::vector<CandidateEval>& ranking, std::ostream& out) {
    out << "degrees,lambda_max,omega_star,upper_bound\n";
    for (const CandidateEval& c : ranking) {
        char buf[96];
        std::snprintf(buf, sizeof buf, ",%.15g,%s,%.15g", c.lambda_max, c.omega_star_value.str().c_str(),
                      c.upper_bound);
        out << csv_quote(c.degrees.str()) << buf << "\n";
    }
}

inline void render_ranking_text(const std::vector<CandidateEval>& ranking, std::ostream& out) {
    out << "  ranking (top " << std::min<std::size_t>(ranking.size(), 20) << " of " << ranking.size()
        << "):\n";
    out << "    degrees | h | lambda_max | omega_star | upper_bound\n";
    std::size_t shown = 0;
    for (const CandidateEval& c : ranking) {
        if (++shown > 20) break;
        out << "    " << c.degrees.str() << " | " << c.h << " | " << fmt_double(c.lambda_max) << " | "
            << c.omega_star_value.str() << " | " << fmt_double(c.upper_bound) << "\n";
    }
}

// Emits the report in the requested format; returns the process exit code.
inline int emit(const RunConfig& cfg, const json& input, const json& result,
                const std::vector<Check>& checks, std::ostream& out,
                const std::vector<CandidateEval>* ranking = nullptr) {
    if (cfg.format == Format::csv) {
        if (!ranking) throw usage_error("csv output is only available for commands with candidate rankings");
        render_ranking_csv(*ranking, out);
    } else if (cfg.format == Format::json) {
        json j;
        j["command"] = cfg.command;
        j["input"] = input;
        j["result"] = result;
        j["checks"] = checks_json(checks);
        out << dump_stable(j);
    } else {
        out << "chainspec " << cfg.command << "\n";
        out << "input:\n";
        render_kv_text(input, out);
        out << "result:\n";
        json flat = result;
        flat.erase("ranking");
        flat.erase("argmins");
        flat.erase("solutions");
        render_kv_text(flat, out);
        if (result.contains("argmins")) out << "  argmins: " << result["argmins"].dump() << "\n";
        if (result.contains("solutions")) out << "  solutions: " << result["solutions"].dump() << "\n";
        if (ranking) render_ranking_text(*ranking, out);
        render_checks_text(checks, out);
    }
    return any_failure(checks) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Commands.

inline int run_lambda(const RunConfig& cfg, std::ostream& out) {
    DegreeSequence d = DegreeSequence::parse(cfg.degrees);
    CandidateEval ce = evaluate_candidate(d);
    long long e = d.edges();
    std::vector<double> spec = cmatrix_eigenvalues(CVector(d));
    double sigma2 = spec.size() > 1 ? std::sqrt(std::max(spec[1], 0.0)) : 0.0;
    double sqrt_e = std::sqrt(static_cast<double>(e));
    double gap = sqrt_e - ce.lambda_max;
    bool complete = ce.h == 1;
    bool at_sqrt_e = gap < cfg.tolerance;

    json input;
    input["degrees"] = cfg.degrees;
    json result;
    result["degrees"] = d.str();
    result["m"] = static_cast<long long>(d.m());
    result["e"] = e;
    result["h"] = ce.h;
    result["lambda_max"] = ce.lambda_max;
    result["lambda_sq"] = ce.lambda_sq;
    result["sigma1"] = ce.lambda_max;
    result["sigma2"] = sigma2;
    result["sqrt_e"] = sqrt_e;
    result["sqrt_e_gap"] = gap;
    result["at_sqrt_e"] = at_sqrt_e;
    result["complete"] = complete;
    result["omega_star"] = ce.omega_star_value.str();
    result["upper_bound"] = ce.upper_bound;

    std::vector<Check> checks;
    checks.push_back({"sqrt_e_bound", gap >= -cfg.tolerance ? "pass" : "fail", gap});
    checks.push_back({"equality_iff_complete", at_sqrt_e == complete ? "pass" : "fail", std::nullopt});
    checks.push_back({"upper_bound_holds", ce.lambda_sq <= ce.upper_bound + cfg.tolerance ? "pass" : "fail",
                      ce.upper_bound - ce.lambda_sq});
    return emit(cfg, input, result, checks, out);
}

inline int run_bounds(const RunConfig& cfg, std::ostream& out) {
    DegreeSequence d = DegreeSequence::parse(cfg.degrees);
    FerrersProfile prof = FerrersProfile::of(d);
    CandidateEval ce = evaluate_candidate(d);
    long long e = d.edges();
    Rational w = omega(prof), wp = omega_prime(prof), ws = ce.omega_star_value;

    std::vector<double> spec = cmatrix_eigenvalues(CVector(d));
    double sigma1_sq = std::max(spec[0], 0.0);
    double sigma2_sq = spec.size() > 1 ? std::max(spec[1], 0.0) : 0.0;
    double product = sigma1_sq * sigma2_sq;
    double omega_slack = product - ws.to_double();

    CVector c(d);
    double est1 = bound_est1(c);
    std::optional<double> maxest;
    if (prof.h() >= 2) maxest = bound_maxest(c);

    json input;
    input["degrees"] = cfg.degrees;
    json result;
    result["degrees"] = d.str();
    result["e"] = e;
    result["h"] = prof.h();
    result["omega"] = w.str();
    result["omega_prime"] = wp.str();
    result["omega_star"] = ws.str();
    result["lambda_sq"] = ce.lambda_sq;
    result["upper_bound"] = ce.upper_bound;
    result["upper_bound_slack"] = ce.upper_bound - ce.lambda_sq;
    result["sigma_product_sq"] = product;
    result["omega_slack"] = omega_slack;
    result["est1"] = est1;
    result["maxest"] = maxest ? json(*maxest) : json(nullptr);

    std::vector<Check> checks;
    checks.push_back({"upper_bound_holds", ce.lambda_sq <= ce.upper_bound + cfg.tolerance ? "pass" : "fail",
                      ce.upper_bound - ce.lambda_sq});
    checks.push_back({"sigma_product_ge_omega", omega_slack >= -1e-7 ? "pass" : "fail", omega_slack});
    checks.push_back({"est1_holds", est1 >= ce.lambda_sq - cfg.tolerance ? "pass" : "fail",
                      est1 - ce.lambda_sq});
    if (maxest) {
        checks.push_back({"maxest_holds", *maxest >= ce.lambda_sq - cfg.tolerance ? "pass" : "fail",
                          *maxest - ce.lambda_sq});
        checks.push_back({"maxest_le_est1", *maxest <= est1 + cfg.tolerance ? "pass" : "fail",
                          est1 - *maxest});
        checks.push_back({"two_block_exact",
                          prof.h() == 2
                              ? (std::abs(ce.lambda_sq - ce.upper_bound) <= cfg.tolerance ? "pass" : "fail")
                              : "skipped",
                          prof.h() == 2 ? std::optional<double>(std::abs(ce.lambda_sq - ce.upper_bound))
                                        : std::nullopt});
    } else {
        checks.push_back({"maxest_holds", "skipped", std::nullopt});
    }
    return emit(cfg, input, result, checks, out);
}

inline int run_min_omega(const RunConfig& cfg, std::ostream& out) {
    json input;
    json result;
    std::vector<Check> checks;
    result["mode"] = cfg.mode;

    if (cfg.mode == "continuous") {
        if (!cfg.e || !cfg.r) throw usage_error("min-omega --mode continuous needs --e and --r");
        input["e"] = *cfg.e;
        input["r"] = *cfg.r;
        ContinuousMin cm = min_omega_continuous(*cfg.r, *cfg.e);
        result["min"] = cm.value.str();
        result["min_value"] = cm.value.to_double();
        json sols = json::array();
        for (const TwoBlockR& s : cm.solutions) {
            json js;
            js["m1"] = s.m1.str();
            js["m2"] = s.m2.str();
            js["n1"] = s.n1.str();
            js["n2"] = s.n2.str();
            sols.push_back(js);
        }
        result["solutions"] = sols;
        bool ok = true;
        for (const TwoBlockR& s : cm.solutions) {
            if (s.m1 * s.n1 + s.m1 * s.n2 + s.m2 * s.n1 != Rational(*cfg.e)) ok = false;
            if (s.m1 * s.m2 * s.n1 * s.n2 != cm.value) ok = false;
        }
        checks.push_back({"solutions_exact", ok ? "pass" : "fail", std::nullopt});
        return emit(cfg, input, result, checks, out);
    }

    if (cfg.mode == "e3k1") {
        if (!cfg.k) throw usage_error("min-omega --mode e3k1 needs --k");
        long long k = *cfg.k;
        if (cfg.e && *cfg.e != 3 * k + 1) throw usage_error("--e must equal 3k+1 in mode e3k1");
        if (cfg.r && *cfg.r != 3) throw usage_error("--r must equal 3 in mode e3k1");
        input["k"] = k;
        IntegerMin im = min_omega_e3k1(k);
        result["e"] = 3 * k + 1;
        result["r"] = 3;
        result["min"] = im.value;
        result["two_k"] = 2 * k;
        json arg = json::array();
        for (const TwoBlockZ& t : im.argmins) {
            json jt;
            jt["m1"] = t.m1;
            jt["m2"] = t.m2;
            jt["n1"] = t.n1;
            jt["n2"] = t.n2;
            arg.push_back(jt);
        }
        result["argmins"] = arg;
        double margin = static_cast<double>(im.value - 2 * k);
        if (k >= 7) {
            checks.push_back({"matches_2k", im.value == 2 * k ? "pass" : "fail", margin});
            std::vector<TwoBlockZ> expect = {{1, 2, k, 1}, {k, 1, 1, 2}};
            std::sort(expect.begin(), expect.end());
            checks.push_back({"argmins_exact", im.argmins == expect ? "pass" : "fail", std::nullopt});
        } else {
            checks.push_back({"matches_2k", "info", margin});
        }
        return emit(cfg, input, result, checks, out);
    }

    // integer mode (default)
    if (!cfg.e || !cfg.r) throw usage_error("min-omega needs --e and --r");
    input["e"] = *cfg.e;
    input["r"] = *cfg.r;
    long long p = cfg.p ? *cfg.p : *cfg.e;
    long long q = cfg.q ? *cfg.q : *cfg.e;
    if (cfg.p) input["p"] = *cfg.p;
    if (cfg.q) input["q"] = *cfg.q;
    IntegerMin im = min_omega_integer(*cfg.e, *cfg.r, p, q);
    result["min"] = im.value;
    json arg = json::array();
    for (const TwoBlockZ& t : im.argmins) {
        json jt;
        jt["m1"] = t.m1;
        jt["m2"] = t.m2;
        jt["n1"] = t.n1;
        jt["n2"] = t.n2;
        arg.push_back(jt);
    }
    result["argmins"] = arg;
    if (*cfg.e >= static_cast<long long>(*cfg.r) * *cfg.r + 1 && !cfg.p && !cfg.q) {
        ContinuousMin cm = min_omega_continuous(*cfg.r, *cfg.e);
        double margin = (Rational(im.value) - cm.value).to_double();
        checks.push_back({"continuous_lower_bound", Rational(im.value) >= cm.value ? "pass" : "fail", margin});
    } else {
        checks.push_back({"continuous_lower_bound", "skipped", std::nullopt});
    }
    return emit(cfg, input, result, checks, out);
}

inline int run_verify_conjecture(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.p || !cfg.q || !cfg.e) throw usage_error("verify-conjecture needs --p, --q and --e");
    ConjectureReport rep = verify_conjecture(*cfg.p, *cfg.q, *cfg.e, cfg.tolerance);

    json input;
    input["p"] = *cfg.p;
    input["q"] = *cfg.q;
    input["e"] = *cfg.e;

    json result;
    result["admissible"] = static_cast<bool>(rep.instance);
    if (rep.instance) {
        json inst;
        inst["r"] = rep.instance->r;
        inst["l"] = rep.instance->l;
        inst["extremal_degrees"] = rep.instance->degrees().str();
        result["instance"] = inst;
    } else {
        result["instance"] = nullptr;
    }
    const CandidateEval& winner = rep.ranking.front();
    result["winner"] = ranking_entry(winner);
    result["winner_is_extremal"] = rep.instance ? json(rep.winner_is_extremal) : json(nullptr);
    result["winner_matches_shape"] = rep.winner_matches_shape;
    result["margin"] = rep.margin ? json(*rep.margin) : json(nullptr);
    result["candidates"] = static_cast<long long>(rep.ranking.size());
    result["verified"] = rep.instance ? json(rep.verified) : json(nullptr);
    json rank = json::array();
    for (const CandidateEval& c : rep.ranking) rank.push_back(ranking_entry(c));
    result["ranking"] = rank;

    std::vector<Check> checks;
    if (rep.instance) {
        checks.push_back({"winner_is_extremal", rep.winner_is_extremal ? "pass" : "fail", std::nullopt});
        std::string margin_status = "pass";
        if (rep.indistinguishable)
            margin_status = "indistinguishable";
        else if (rep.margin && *rep.margin <= cfg.tolerance && !rep.tie_resolved_exactly)
            margin_status = "fail";
        checks.push_back({"strict_margin", margin_status, rep.margin});
        checks.push_back({"side_bound", rep.side_bound_ok ? "pass" : "fail", std::nullopt});
    } else {
        checks.push_back({"conjecture_shape", rep.winner_matches_shape ? "pass" : "info", std::nullopt});
        if (rep.indistinguishable) checks.push_back({"strict_margin", "indistinguishable", rep.margin});
    }
    int code = emit(cfg, input, result, checks, out, &rep.ranking);
    if (!rep.instance) return 0; // informational run
    return rep.verified && code == 0 ? 0 : 1;
}

inline int run_verify_dominance(const RunConfig& cfg, std::ostream& out) {
    DegreeSequence d = DegreeSequence::parse(cfg.degrees);
    if (!cfg.n_min || !cfg.n_max) throw usage_error("verify-dominance needs --n-min and --n-max");
    DominanceReport rep = verify_chain_dominance(d, *cfg.n_min, *cfg.n_max, default_budget(), cfg.tolerance);

    json input;
    input["degrees"] = cfg.degrees;
    input["n_min"] = *cfg.n_min;
    input["n_max"] = *cfg.n_max;

    json result;
    result["degrees"] = d.str();
    result["chain_sigma"] = rep.chain_sigma;
    result["matrices"] = rep.matrices;
    result["attainers"] = rep.attainers;
    result["max_sigma"] = rep.max_sigma;
    result["chain_attains_max"] = rep.chain_attains_max;
    result["attainers_canonical"] = rep.attainers_canonical;
    result["verified"] = rep.verified;

    std::vector<Check> checks;
    checks.push_back({"chain_attains_max", rep.chain_attains_max ? "pass" : "fail",
                      rep.chain_sigma - rep.max_sigma});
    checks.push_back({"attainers_canonical", rep.attainers_canonical ? "pass" : "fail", std::nullopt});
    checks.push_back({"patterns_found", rep.matrices > 0 ? "pass" : "fail",
                      static_cast<double>(rep.matrices)});
    return emit(cfg, input, result, checks, out);
}

inline int run_enumerate(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.p || !cfg.q || !cfg.e) throw usage_error("enumerate needs --p, --q and --e");
    std::vector<DegreeSequence> cands = enumerate_chain_candidates(*cfg.p, *cfg.q, *cfg.e);
    std::vector<CandidateEval> ranking = parallel_map(cands, evaluate_candidate);
    std::stable_sort(ranking.begin(), ranking.end(), [](const CandidateEval& a, const CandidateEval& b) {
        if (a.lambda_sq != b.lambda_sq) return a.lambda_sq > b.lambda_sq;
        return b.degrees < a.degrees;
    });

    json input;
    input["p"] = *cfg.p;
    input["q"] = *cfg.q;
    input["e"] = *cfg.e;
    json result;
    result["count"] = static_cast<long long>(ranking.size());
    json rank = json::array();
    for (const CandidateEval& c : ranking) rank.push_back(ranking_entry(c));
    result["ranking"] = rank;
    return emit(cfg, input, result, {}, out, &ranking);
}

inline int run(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "lambda") return run_lambda(cfg, out);
    if (cfg.command == "bounds") return run_bounds(cfg, out);
    if (cfg.command == "min-omega") return run_min_omega(cfg, out);
    if (cfg.command == "verify-conjecture") return run_verify_conjecture(cfg, out);
    if (cfg.command == "verify-dominance") return run_verify_dominance(cfg, out);
    if (cfg.command == "enumerate") return run_enumerate(cfg, out);
    throw usage_error("unknown command '" + cfg.command + "'");
}

// Full process entry: parse, run, and map the error taxonomy to exit codes
// (0 success, 1 verification failure, 2 usage or domain error, 3 resource
// limit).
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        RunConfig cfg = parse_args(std::move(args));
        return run(cfg, out);
    } catch (const help_requested& h) {
        out << h.text;
        return 0;
    } catch (const usage_error& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const resource_limit& ex) {
        err << "resource limit: " << ex.what() << "\n";
        return 3;
    } catch (const invalid_input& ex) {
        err << "invalid input: " << ex.what() << "\n";
        return 2;
    } catch (const out_of_hypothesis& ex) {
        err << "out of hypothesis: " << ex.what() << "\n";
        return 2;
    } catch (const empty_feasible& ex) {
        err << "empty feasible set: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

} // namespace chainspec::cli
