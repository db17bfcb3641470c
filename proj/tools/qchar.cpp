#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qchar/identities.hpp"
#include "qchar/json_io.hpp"
#include "qchar/kato.hpp"
#include "qchar/partition.hpp"
#include "qchar/suite.hpp"
#include "qchar/whittaker.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

using qchar::Json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

std::string monomial_text(const qchar::Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.x.size(); ++i) {
        if (m.x[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << i + 1;
        if (m.x[i] > 1) os << "^" << m.x[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string coefficient_prefix(const qchar::QPoly& c) {
    if (c == qchar::QPoly(1)) return "";
    bool single_term = false;
    int terms = 0;
    for (int k = 0; k <= c.degree(); ++k)
        if (c.coeff(k) != 0) ++terms;
    single_term = terms == 1;
    std::string s = c.str();
    return single_term ? s + "*" : "(" + s + ")*";
}

// rendered with the lexicographically greatest exponent first, so x1 leads
std::string render_monomial_basis(const qchar::SymPoly<qchar::QPoly>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << " + ";
        os << coefficient_prefix(it->second) << monomial_text(it->first);
        first = false;
    }
    return os.str();
}

std::string render_schur_basis(const std::map<qchar::Partition, qchar::QPoly>& mult) {
    if (mult.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (!first) os << " + ";
        os << coefficient_prefix(it->second) << "s[" << it->first.str() << "]";
        first = false;
    }
    return os.str();
}

std::string report_text(const qchar::IdentityReport& r) {
    std::ostringstream os;
    os << r.identity << " (";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        if (!first) os << ", ";
        os << k << "=" << v;
        first = false;
    }
    os << "): ";
    if (r.verified) os << "verified";
    else if (r.inconclusive) os << "inconclusive";
    else os << "MISMATCH";
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        os << " at x=[";
        for (std::size_t i = 0; i < m.x_exponents.size(); ++i)
            os << (i ? "," : "") << m.x_exponents[i];
        os << "] y=[";
        for (std::size_t i = 0; i < m.y_exponents.size(); ++i)
            os << (i ? "," : "") << m.y_exponents[i];
        os << "] q^" << m.q_power << ": lhs=" << m.lhs << " rhs=" << m.rhs;
    }
    os << " [" << r.elapsed_ms << " ms]";
    return os.str();
}

int cmd_whittaker(const std::string& lambda_text, int vars, const std::string& basis,
                  const std::string& format, const std::string& out_path) {
    qchar::Partition la = qchar::Partition::parse(lambda_text);
    if (la.length() > vars) {
        std::cerr << "error: partition has more parts than variables\n";
        return kExitUsage;
    }
    auto p = qchar::whittaker_p(la, vars);
    if (basis == "schur") {
        auto mult = qchar::weyl_schur_multiplicities(la, vars);
        if (format == "json") {
            Json terms = Json::array();
            for (const auto& [mu, c] : mult)
                terms.push_back(Json{{"partition", mu.str()}, {"coefficient", qchar::to_json(c)}});
            emit(Json{{"lambda", la.str()}, {"vars", vars}, {"basis", "schur"},
                      {"terms", terms}}
                     .dump(2),
                 out_path);
        } else {
            emit(render_schur_basis(mult), out_path);
        }
    } else {
        if (format == "json") {
            Json j = qchar::to_json(p);
            j["lambda"] = la.str();
            j["basis"] = "monomial";
            emit(j.dump(2), out_path);
        } else {
            emit(render_monomial_basis(p), out_path);
        }
    }
    return kExitOk;
}

int cmd_fillings(const std::string& lambda_text, bool histogram, const std::string& format,
                 const std::string& out_path) {
    qchar::Partition la = qchar::Partition::parse(lambda_text);
    std::ostringstream os;
    if (histogram) {
        qchar::QPoly dim = qchar::kato_graded_dim(la);
        if (format == "json") {
            Json h = Json::object();
            for (int k = 0; k <= dim.degree(); ++k)
                h[std::to_string(k)] = dim.coeff(k).get_str();
            os << Json{{"lambda", la.str()}, {"histogram", h},
                       {"total", dim.eval_at_one().get_str()}}
                      .dump(2);
        } else {
            for (int k = 0; k <= dim.degree(); ++k)
                os << k << ": " << dim.coeff(k).get_str() << "\n";
            os << "total: " << dim.eval_at_one().get_str() << "\n";
        }
    } else {
        if (format == "json") {
            Json lines = Json::array();
            qchar::enumerate_fillings(la, [&](const qchar::Filling& f) {
                lines.push_back(qchar::filling_line(f));
            });
            os << Json{{"lambda", la.str()}, {"fillings", lines}}.dump(2);
        } else {
            qchar::enumerate_fillings(
                la, [&](const qchar::Filling& f) { os << qchar::filling_line(f) << "\n"; });
        }
    }
    emit(os.str(), out_path);
    return kExitOk;
}

int cmd_verify(const std::string& identity, std::map<std::string, long> params,
               const std::string& format, const std::string& out_path) {
    qchar::SuiteJob job{identity, std::move(params)};
    qchar::IdentityReport rep = qchar::run_job(job);
    emit(format == "json" ? qchar::to_json(rep).dump(2) : report_text(rep), out_path);
    if (rep.inconclusive) return kExitInconclusive;
    return rep.verified ? kExitOk : kExitMismatch;
}

int cmd_report(const std::string& suite, const std::string& grid_path, int jobs,
               const std::string& out_path) {
    std::vector<qchar::SuiteJob> grid;
    if (suite == "desk") {
        grid = qchar::desk_suite();
    } else if (suite == "extended") {
        grid = qchar::extended_suite();
    } else if (suite == "custom") {
        if (grid_path.empty()) {
            std::cerr << "error: --grid FILE is required with --suite custom\n";
            return kExitUsage;
        }
        std::ifstream in(grid_path);
        if (!in) {
            std::cerr << "error: cannot read grid file " << grid_path << "\n";
            return kExitUsage;
        }
        Json j = Json::parse(in);
        for (const auto& e : j) {
            qchar::SuiteJob job;
            job.identity = e.at("identity").get<std::string>();
            if (e.contains("params"))
                for (const auto& [k, v] : e.at("params").items())
                    job.params[k] = v.get<long>();
            grid.push_back(std::move(job));
        }
    } else {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
    }
    for (const auto& job : grid) qchar::validate_job(job);  // bad tags are usage errors
    qchar::SuiteSummary summary;
    auto reports = qchar::run_suite(grid, jobs, &summary);
    emit(qchar::suite_document(reports, summary).dump(2), out_path);
    if (summary.failed > 0) return kExitMismatch;
    if (summary.inconclusive > 0) return kExitInconclusive;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded characters of current-algebra modules and their identities"};
    app.require_subcommand(1);

    std::string cache_dir;
    app.add_option("--cache", cache_dir, "directory for cached polynomials (env QCHAR_CACHE)");

    // whittaker
    auto* wcmd = app.add_subcommand("whittaker", "print p_lambda(x;q)");
    std::string w_lambda, w_basis = "monomial", w_format = "text", w_out;
    int w_vars = 0;
    wcmd->add_option("--lambda", w_lambda, "partition, e.g. 3,1")->required();
    wcmd->add_option("--vars", w_vars, "number of variables")->required()
        ->check(CLI::PositiveNumber);
    wcmd->add_option("--basis", w_basis, "monomial|schur")
        ->check(CLI::IsMember({"monomial", "schur"}));
    wcmd->add_option("--format", w_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    wcmd->add_option("--out", w_out, "write to file instead of stdout");

    // fillings
    auto* fcmd = app.add_subcommand("fillings", "enumerate column-increasing fillings");
    std::string f_lambda, f_format = "text", f_out;
    bool f_list = false, f_hist = false;
    fcmd->add_option("lambda", f_lambda, "partition, e.g. 3,3,1")->required();
    fcmd->add_flag("--list", f_list, "one filling per line with its degree (default)");
    fcmd->add_flag("--histogram", f_hist, "degree -> count table");
    fcmd->add_option("--format", f_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    fcmd->add_option("--out", f_out, "write to file instead of stdout");

    // verify
    auto* vcmd = app.add_subcommand("verify", "verify one character identity");
    std::string v_identity, v_mu, v_format = "text", v_out;
    long v_n = -1, v_m = -1, v_deg = -1, v_qdeg = -1, v_cutoff = -1, v_max_size = -1,
         v_max_vars = -1;
    vcmd->add_option("identity", v_identity,
                     "cauchy-schur|cauchy-whittaker|wedge|schur-weyl-current|bgg-gl2|"
                     "kato-vs-whittaker|dim-product|sign-multiplicity|q0-schur|q1-elementary")
        ->required();
    vcmd->add_option("--n", v_n, "x-alphabet size / box count");
    vcmd->add_option("--m", v_m, "y-alphabet size / variable count");
    vcmd->add_option("--deg", v_deg, "degree cutoff D");
    vcmd->add_option("--qdeg", v_qdeg, "q-truncation Q");
    vcmd->add_option("--mu", v_mu, "weight for bgg-gl2, e.g. 2,1");
    vcmd->add_option("--cutoff", v_cutoff, "cutoff cap for bgg-gl2");
    vcmd->add_option("--max-size", v_max_size, "largest |lambda| for the sweep identities");
    vcmd->add_option("--max-vars", v_max_vars, "largest variable count for the sweep identities");
    vcmd->add_option("--format", v_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    vcmd->add_option("--out", v_out, "write to file instead of stdout");

    // report
    auto* rcmd = app.add_subcommand("report", "run a suite and emit an aggregate JSON report");
    std::string r_suite = "desk", r_grid, r_out;
    int r_jobs = 1;
    rcmd->add_option("--suite", r_suite, "desk|extended|custom");
    rcmd->add_option("--grid", r_grid, "JSON grid file for --suite custom");
    rcmd->add_option("--jobs", r_jobs, "worker count")->check(CLI::PositiveNumber);
    rcmd->add_option("--out", r_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message / help
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cache_dir.empty()) {
            if (const char* env = std::getenv("QCHAR_CACHE")) cache_dir = env;
        }
        if (!cache_dir.empty()) qchar::WhittakerTable::global().set_cache_dir(cache_dir);

        if (wcmd->parsed()) return cmd_whittaker(w_lambda, w_vars, w_basis, w_format, w_out);
        if (fcmd->parsed()) return cmd_fillings(f_lambda, f_hist && !f_list, f_format, f_out);
        if (vcmd->parsed()) {
            std::map<std::string, long> params;
            if (v_n >= 0) params["n"] = v_n;
            if (v_m >= 0) params["m"] = v_m;
            if (v_deg >= 0) params["deg"] = v_deg;
            if (v_qdeg >= 0) params["qdeg"] = v_qdeg;
            if (v_cutoff >= 0) params["cutoff"] = v_cutoff;
            if (v_max_size >= 0) params["max_size"] = v_max_size;
            if (v_max_vars >= 0) params["max_vars"] = v_max_vars;
            if (!v_mu.empty()) {
                qchar::Partition mu = qchar::Partition::parse(v_mu);
                params["mu1"] = mu.part(0);
                params["mu2"] = mu.part(1);
            }
            return cmd_verify(v_identity, std::move(params), v_format, v_out);
        }
        if (rcmd->parsed()) return cmd_report(r_suite, r_grid, r_jobs, r_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
