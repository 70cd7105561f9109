// theta_forge: expansion, counting, map verification and batch identity
// reports for truncated theta series and partition families.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "theta/bijections.hpp"
#include "theta/checks.hpp"
#include "theta/constraint.hpp"
#include "theta/io.hpp"
#include "theta/qseries.hpp"
#include "theta/special_counts.hpp"

using namespace theta;
using nlohmann::json;

namespace {

int default_order() {
    if (const char* env = std::getenv("THETA_FORGE_ORDER")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 200;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

struct SeriesParams {
    std::optional<long long> R, S, k, m, s, a, variant, n_max, zsign, zexp;
    std::map<std::string, long long> map() const {
        std::map<std::string, long long> p;
        if (R) p["R"] = *R;
        if (S) p["S"] = *S;
        if (k) p["k"] = *k;
        if (m) p["m"] = *m;
        if (s) p["s"] = *s;
        if (a) p["a"] = *a;
        if (variant) p["variant"] = *variant;
        if (n_max) p["n_max"] = *n_max;
        return p;
    }
};

void add_param_flags(CLI::App* cmd, SeriesParams& sp) {
    cmd->add_option("--R", sp.R, "modulus R");
    cmd->add_option("--S", sp.S, "residue S");
    cmd->add_option("--k", sp.k, "truncation index k");
    cmd->add_option("--m", sp.m, "theta parameter m");
    cmd->add_option("--s", sp.s, "theta parameter s");
    cmd->add_option("--a", sp.a, "KMR parameter a");
    cmd->add_option("--variant", sp.variant, "variant selector");
}

TruncatedSeries build_series(const std::string& name, const SeriesParams& sp, int N) {
    const auto p = sp.map();
    if (name == "pentagonal") return pentagonal_series(static_cast<int>(sp.R.value_or(1)), N);
    if (name == "theta")
        return bilateral_theta(static_cast<int>(sp.m.value_or(0)), static_cast<int>(sp.s.value_or(0)), N);
    if (name == "jtp")
        return jtp_sum(static_cast<int>(sp.m.value_or(0)), static_cast<int>(sp.s.value_or(0)),
                       static_cast<int>(sp.zsign.value_or(1)), static_cast<int>(sp.zexp.value_or(0)), N);
    if (name == "gauss_binom")
        return gaussian_binomial(static_cast<int>(sp.m.value_or(0)), static_cast<int>(sp.k.value_or(0)), N);
    if (name == "a_series")
        return a_series(static_cast<int>(sp.S.value_or(0)), static_cast<int>(sp.R.value_or(0)),
                        static_cast<int>(sp.k.value_or(1)), N);
    if (name == "y_series")
        return y_series(static_cast<int>(sp.S.value_or(0)), static_cast<int>(sp.R.value_or(0)),
                        static_cast<int>(sp.k.value_or(0)), N);
    if (name == "h1") return h1_series(static_cast<int>(sp.k.value_or(1)), N);
    if (name == "h2") return h2_series(static_cast<int>(sp.k.value_or(1)), N);
    if (name == "h1h2") return h1h2_series(static_cast<int>(sp.k.value_or(1)), N);
    return auxiliary_series(name, p, N);
}

void render_series(const TruncatedSeries& t, const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << to_json(t).dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        os << "n,coefficient\n";
        for (int n = 0; n <= t.order(); ++n) os << n << "," << to_dec(t[n]) << "\n";
        return;
    }
    for (int n = 0; n <= t.order(); ++n) os << n << "\t" << to_dec(t[n]) << "\n";
}

int cmd_expand(const std::string& name, const SeriesParams& sp, int N, const std::string& format,
               const std::string& out_path) {
    TruncatedSeries t = build_series(name, sp, N);
    std::ofstream file;
    render_series(t, format, open_out(file, out_path));
    return 0;
}

int cmd_verify(const std::string& name, const SeriesParams& sp, long long family, long long sign,
               int N, const std::string& format, const std::string& out_path) {
    auto p = sp.map();
    if (family) p["family"] = family;
    if (sign) p["sign"] = sign;
    CheckReport r = run_check(name, p, N);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    if (format == "json") {
        os << to_json(r).dump(2) << "\n";
    } else if (format == "csv") {
        os << report_csv_header() << "\n" << report_csv_line(r) << "\n";
    } else {
        os << "check " << r.name << " [" << r.range << "] tag=" << r.tag << " -> ";
        if (r.status == CheckStatus::Pass)
            os << "pass";
        else if (r.status == CheckStatus::Threshold)
            os << "threshold(n0=" << r.threshold_n0 << ")";
        else {
            os << "FAIL at n=" << r.witness->index << " expected=" << r.witness->expected
               << " actual=" << r.witness->actual;
        }
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << "\n";
    }
    return r.status == CheckStatus::Fail ? 1 : 0;
}

int cmd_count(long long n, long long n_max, const Constraint& c, const std::string& format,
              const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    const long long lo = (n_max >= 0) ? 0 : n;
    const long long hi = (n_max >= 0) ? n_max : n;
    if (format == "csv") os << "n,count\n";
    if (format == "json") {
        json rows = json::array();
        for (long long i = lo; i <= hi; ++i)
            rows.push_back({{"n", i}, {"count", count(i, c)}});
        os << json{{"constraint", to_json(c)}, {"counts", rows}}.dump(2) << "\n";
        return 0;
    }
    for (long long i = lo; i <= hi; ++i)
        os << i << (format == "csv" ? "," : "\t") << count(i, c) << "\n";
    return 0;
}

json map_report(const std::string& map_name, const std::map<std::string, long long>& params,
                long long n_max, bool ok, const std::string& witness) {
    json j{{"name", "maps:" + map_name},
           {"params", params},
           {"range", "n<=" + std::to_string(n_max)},
           {"status", ok ? "pass" : "fail"}};
    if (!ok && !witness.empty()) j["witness"] = witness;
    return j;
}

int run_maps(const std::string& map_name, const SeriesParams& sp, long long n_max,
             const std::string& trace_path, const std::string& format, std::ostream& os) {
    std::ofstream trace;
    const bool tracing = !trace_path.empty();
    if (tracing) {
        trace.open(trace_path);
        if (!trace) throw CLI::ValidationError("--trace", "cannot open " + trace_path);
    }
    auto emit = [&](const MapTrace& t) {
        if (tracing) trace << to_json(t).dump() << "\n";
    };

    if (map_name == "F") {
        bool invol = true, signrev = true;
        for (long long n = 0; n <= n_max; ++n) {
            for (long long i = 0; i <= n; ++i) {
                for (const auto& lam : enumerate(i, Constraint::distinct_parts())) {
                    for (const auto& mu : enumerate(n - i, Constraint::unrestricted())) {
                        PartitionPair p{lam, mu};
                        if (p.first.empty() && p.second.empty()) continue;
                        MapTrace t = F(p);
                        emit(t);
                        invol = invol && (F(t.output).output == p);
                        signrev = signrev && ((t.output.first.length() + p.first.length()) % 2 == 1);
                    }
                }
            }
        }
        if (format == "json")
            os << map_report("F", {}, n_max, invol && signrev,
                             invol ? "sign not reversed" : "not an involution")
                      .dump(2)
               << "\n";
        else
            os << "map=F n_max=" << n_max << " involution=" << (invol ? "true" : "false")
               << " sign_reversing=" << (signrev ? "true" : "false") << "\n";
        return (invol && signrev) ? 0 : 1;
    }

    const int R = static_cast<int>(sp.R.value_or(0)), S = static_cast<int>(sp.S.value_or(0));
    if (map_name == "phi1" || map_name == "phi2") {
        if (R < 2 || S < 1 || S >= R || 2 * S == R)
            throw CLI::ValidationError("--S", "need 1 <= S < R with S != R/2");
        bool injective = true, on_target = true, total = true;
        for (long long n = 1; n <= n_max; ++n) {
            if (map_name == "phi2" && (n == R || n == 2 * R)) continue;
            std::set<PartitionPair> img;
            const auto domain =
                (map_name == "phi1") ? y_set(n, S, R, 0) : residual_set(1, R, S, n);
            const auto target = y_set(n, S, R, map_name == "phi1" ? 1 : 2);
            const std::set<PartitionPair> tset(target.begin(), target.end());
            for (const auto& p : domain) {
                MapTrace t;
                try {
                    t = (map_name == "phi1") ? phi1(R, S, p) : phi2(R, S, p);
                } catch (const DomainViolation&) {
                    total = false;
                    continue;
                }
                emit(t);
                injective = injective && img.insert(t.output).second;
                on_target = on_target && tset.count(t.output) > 0;
            }
        }
        const bool ok = injective && on_target && total;
        if (format == "json")
            os << map_report(map_name, {{"R", R}, {"S", S}}, n_max, ok,
                             injective ? (on_target ? "totality" : "off-target image")
                                       : "image collision")
                      .dump(2)
               << "\n";
        else
            os << "map=" << map_name << " R=" << R << " S=" << S << " n_max=" << n_max
               << " injective=" << (injective ? "true" : "false")
               << " target=" << (on_target ? "true" : "false")
               << " total=" << (total ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }

    if (map_name == "tgen") {
        const int m = static_cast<int>(sp.m.value_or(0)), s = static_cast<int>(sp.s.value_or(0));
        if (m < 3 || s < 1 || s >= m)
            throw CLI::ValidationError("--m", "need m >= 3 and 0 < s < m");
        bool invol = true, census_ok = true;
        for (long long n = 0; n <= n_max; ++n) {
            long long census = 0;
            for_each_tgen(n, m, s, [&](const TgenElement& el) {
                census += (el.sign_length() % 2 == 0) ? 1 : -1;
                TgenTrace t = tgen_involution(m, s, el);
                if (tracing)
                    trace << json{{"input", to_json(el.merged())},
                                  {"output", t.output ? to_json(t.output->merged()) : json()},
                                  {"case_tag", t.case_tag}}
                                 .dump()
                          << "\n";
                if (t.output) {
                    TgenTrace back = tgen_involution(m, s, *t.output);
                    invol = invol && back.output && *back.output == el;
                }
            });
            census_ok =
                census_ok && (Int(census) == bilateral_theta(m, s, std::max<long long>(n, 1))[n]);
        }
        const bool ok = invol && census_ok;
        if (format == "json")
            os << map_report("tgen", {{"m", m}, {"s", s}}, n_max, ok,
                             invol ? "census mismatch" : "not an involution")
                      .dump(2)
               << "\n";
        else
            os << "map=tgen m=" << m << " s=" << s << " n_max=" << n_max
               << " involution_cases12=" << (invol ? "true" : "false")
               << " census_matches_theta=" << (census_ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    throw CLI::ValidationError("--map", "unknown map " + map_name);
}

int cmd_suite(const std::string& tag, int N, const std::string& out_dir, bool progress) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    if (progress) std::cerr << "suite: tag=" << tag << " N=" << N << "\n";
    std::vector<CheckReport> reports = run_suite(tag, N);
    json all = json::array();
    std::ofstream csv(out_dir + "/reports.csv");
    csv << report_csv_header() << "\n";
    int theorem_failures = 0;
    for (const auto& r : reports) {
        all.push_back(to_json(r));
        csv << report_csv_line(r) << "\n";
        const char* st = r.status == CheckStatus::Pass
                             ? "pass"
                             : (r.status == CheckStatus::Threshold ? "threshold" : "FAIL");
        std::cout << r.name << " [" << r.tag << "] " << st;
        if (!r.note.empty()) std::cout << "  (" << r.note << ")";
        std::cout << "\n";
        if (progress) std::cerr << "  done " << r.name << " in " << r.runtime_ms << " ms\n";
        if (r.status == CheckStatus::Fail && r.tag == "theorem") ++theorem_failures;
    }
    std::ofstream jf(out_dir + "/reports.json");
    jf << all.dump(2) << "\n";
    std::cout << reports.size() << " rows, " << theorem_failures << " theorem failures\n";
    return theorem_failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta_forge: exact truncated theta series, partition counts, identity checks"};
    app.require_subcommand(1);
    app.fallthrough();

    int N = default_order();
    std::string format = "plain", out_path;
    app.add_option("--order,-N", N, "truncation order (env THETA_FORGE_ORDER)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "plain | json | csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--out", out_path, "write output to a file");

    auto* expand = app.add_subcommand("expand", "print coefficients of a named series");
    std::string series_name;
    SeriesParams esp;
    expand->add_option("--series", series_name, "series name")->required();
    add_param_flags(expand, esp);
    expand->add_option("--z-sign", esp.zsign, "sign of the monomial z");
    expand->add_option("--z-exp", esp.zexp, "exponent of the monomial z");

    auto* cnt = app.add_subcommand("count", "count partitions under a constraint");
    long long cn = -1, cn_max = -1;
    bool cdistinct = false, codd = false;
    long long cmod = 0, cregular = 0, cmin = 0, cmax = 0;
    std::string cres, crequired;
    std::vector<std::string> cmults;
    cnt->add_option("--n", cn, "single n");
    cnt->add_option("--n-max", cn_max, "count all 0..n_max");
    cnt->add_flag("--distinct", cdistinct, "distinct parts");
    cnt->add_flag("--odd", codd, "odd parts");
    cnt->add_option("--mod", cmod, "modulus for --residues");
    cnt->add_option("--residues", cres, "comma-separated residues");
    cnt->add_option("--regular", cregular, "forbid parts divisible by L");
    cnt->add_option("--min-part", cmin, "minimum part");
    cnt->add_option("--max-part", cmax, "maximum part");
    cnt->add_option("--max-mult", cmults, "value:cap multiplicity caps");
    cnt->add_option("--required", crequired, "comma-separated required parts");

    auto* verify = app.add_subcommand("verify", "run one identity check");
    std::string check_name;
    SeriesParams vsp;
    long long vfamily = 0, vsign = 0;
    verify->add_option("--check", check_name, "check name")->required();
    add_param_flags(verify, vsp);
    verify->add_option("--n-max", vsp.n_max, "enumeration bound override");
    verify->add_option("--family", vfamily, "u-set family (1..4)");
    verify->add_option("--sign", vsign, "u-set sign (+1/-1)");

    auto* maps = app.add_subcommand("maps", "verify a combinatorial map exhaustively");
    std::string map_name, trace_path;
    SeriesParams msp;
    long long mn_max = 25;
    maps->add_option("--map", map_name, "F | phi1 | phi2 | tgen")->required();
    add_param_flags(maps, msp);
    maps->add_option("--n-max", mn_max, "size bound");
    maps->add_option("--trace", trace_path, "write MapTrace JSON lines here");

    auto* suite = app.add_subcommand("suite", "run the identity registry");
    std::string tag = "all", out_dir = "reports";
    bool progress = false;
    suite->add_option("--tag", tag, "theorems | conjectures | all | none");
    suite->add_option("--out", out_dir, "report directory");
    suite->add_flag("--progress", progress, "progress to stderr");

    try {
        app.parse(argc, argv);
        if (*expand) return cmd_expand(series_name, esp, N, format, out_path);
        if (*cnt) {
            if (cn < 0 && cn_max < 0) throw CLI::ValidationError("--n", "need --n or --n-max");
            Constraint c;
            if (cdistinct) c.distinct = true;
            if (codd) {
                c.modulus = 2;
                c.allowed_residues = {1};
            }
            if (cmod > 0) {
                if (codd) throw CLI::ValidationError("--mod", "conflicts with --odd");
                c.modulus = static_cast<int>(cmod);
                std::stringstream ss(cres);
                std::string tok;
                while (std::getline(ss, tok, ',')) c.allowed_residues.insert(std::stoi(tok));
                if (c.allowed_residues.empty())
                    throw CLI::ValidationError("--residues", "required with --mod");
            } else if (!cres.empty()) {
                throw CLI::ValidationError("--residues", "requires --mod");
            }
            if (cregular > 0) c.forbidden_divisor = static_cast<int>(cregular);
            if (cmin > 0) c.min_part = static_cast<int>(cmin);
            if (cmax > 0) c.max_part = static_cast<int>(cmax);
            for (const std::string& vc : cmults) {
                const auto pos = vc.find(':');
                if (pos == std::string::npos)
                    throw CLI::ValidationError("--max-mult", "expected value:cap");
                c.max_multiplicity[std::stoi(vc.substr(0, pos))] = std::stoi(vc.substr(pos + 1));
            }
            if (!crequired.empty()) {
                std::stringstream ss(crequired);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    const int v = std::stoi(tok);
                    if (!c.value_allowed(v))
                        throw CLI::ValidationError("--required",
                                                   "required part contradicts the other clauses");
                    c.required_parts.push_back(v);
                }
            }
            return cmd_count(cn, cn_max, c, format, out_path);
        }
        if (*verify) return cmd_verify(check_name, vsp, vfamily, vsign, N, format, out_path);
        if (*maps) {
            std::ofstream file;
            return run_maps(map_name, msp, mn_max, trace_path, format, open_out(file, out_path));
        }
        if (*suite) return cmd_suite(tag, N, out_dir, progress);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
