// Command-line front end: exact computations around Heilbronn sums, the
// subgroup of p-th powers mod p^2, and Fermat quotients.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heilbronn/cache.hpp"
#include "heilbronn/certificate_io.hpp"
#include "heilbronn/fermat.hpp"
#include "heilbronn/group.hpp"
#include "heilbronn/spectral.hpp"
#include "heilbronn/stepanov.hpp"
#include "heilbronn/sums.hpp"
#include "heilbronn/verify.hpp"

namespace {

using namespace hb;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << csv_field(t.columns[i]) << (i + 1 < t.columns.size() ? "," : "\n");
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            os << csv_field(row[i]) << (i + 1 < row.size() ? "," : "\n");
    return os.str();
}

std::string to_json_doc(const std::string& command, std::optional<u64> p, const Table& t) {
    nlohmann::json doc;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    if (p) doc["p"] = *p;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r;
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

struct GlobalOpts {
    unsigned threads = 1;
    std::string cache_dir;
    std::string format = "csv";
    std::string out;
};

void write_output(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + g.out);
        f << text;
    }
}

// Renders (serving from the cache when possible) and writes the result.
void emit(const GlobalOpts& g, const std::string& command,
          std::vector<std::pair<std::string, std::string>> flags, std::optional<u64> p,
          const std::function<Table()>& compute) {
    flags.emplace_back("format", g.format);
    std::string text;
    auto render = [&] {
        Table t = compute();
        return g.format == "json" ? to_json_doc(command, p, t) : to_csv(t);
    };
    if (!g.cache_dir.empty()) {
        ResultCache cache(g.cache_dir);
        std::string key = ResultCache::make_key(command, std::move(flags));
        if (auto hit = cache.lookup(key)) {
            text = *hit;
        } else {
            text = render();
            cache.store(key, text);
        }
    } else {
        text = render();
    }
    write_output(g, text);
}

std::vector<u32> parse_coset_list(const std::string& s) {
    std::vector<u32> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(static_cast<u32>(std::stoul(tok)));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact desk-scale computations: Heilbronn exponential sums, the subgroup "
                 "of p-th powers mod p^2, additive energies, Stepanov certificates and "
                 "Fermat quotients"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("HEILBRONN_CACHE")) g.cache_dir = env;
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache", g.cache_dir, "result cache directory");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "output path (default: stdout)");

    u64 p_arg = 0, k_arg = 2, a_arg = 0, n_arg = 0, h_arg = 0, lambda_arg = 1, cap_arg = 2003;
    std::string cells_arg, params_arg, range_arg, cert_file, q_arg, q1_arg, q2_arg;

    auto* cmd_gamma = app.add_subcommand("gamma", "elements and coset table of Gamma");
    cmd_gamma->add_option("--p", p_arg, "prime modulus base")->required();

    auto* cmd_sum = app.add_subcommand("sum", "Heilbronn sum S(a)");
    cmd_sum->add_option("--p", p_arg)->required();
    cmd_sum->add_option("--a", a_arg)->required();

    auto* cmd_scan = app.add_subcommand("scan", "bound-ratio report");
    cmd_scan->add_option("--p", p_arg)->required();
    u64 pmax_arg = 0;
    cmd_scan->add_option("--pmax", pmax_arg, "scan all primes in [p, pmax]");
    cmd_scan->add_option("--cap", cap_arg, "cap for the energy rows");

    auto* cmd_energy = app.add_subcommand("energy", "E_k(Gamma)");
    cmd_energy->add_option("--p", p_arg)->required();
    cmd_energy->add_option("--k", k_arg);

    auto* cmd_tk = app.add_subcommand("tk", "T_k(Gamma)");
    cmd_tk->add_option("--p", p_arg)->required();
    cmd_tk->add_option("--k", k_arg)->required();

    auto* cmd_psi = app.add_subcommand("psi", "psi_k table");
    cmd_psi->add_option("--p", p_arg)->required();
    cmd_psi->add_option("--k", k_arg)->required();

    auto* cmd_cert = app.add_subcommand("stepanov-cert", "build an auxiliary-polynomial certificate");
    cmd_cert->add_option("--p", p_arg)->required();
    cmd_cert->add_option("--cells", cells_arg, "comma list i1:j1,i2:j2")->required();
    cmd_cert->add_option("--params", params_arg, "A,B,C,D (default: from p and cell count)");
    cmd_cert->add_option("--lambda", lambda_arg);

    auto* cmd_cverify = app.add_subcommand("stepanov-verify", "verify a certificate file");
    cmd_cverify->add_option("cert", cert_file, "certificate JSON")->required();

    auto* cmd_fermat = app.add_subcommand("fermat", "Fermat quotient statistics");
    cmd_fermat->require_subcommand(1);
    auto* cmd_lp = cmd_fermat->add_subcommand("lp", "l_p over a prime range");
    cmd_lp->add_option("--range", range_arg, "pmin:pmax")->required();
    auto* cmd_q = cmd_fermat->add_subcommand("q", "single quotient q(n)");
    cmd_q->add_option("--p", p_arg)->required();
    cmd_q->add_option("--n", n_arg)->required();
    auto* cmd_nk = cmd_fermat->add_subcommand("nk", "congruence count N over u x = y");
    cmd_nk->add_option("--p", p_arg)->required();
    cmd_nk->add_option("--H", h_arg)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the full identity suite");
    cmd_verify->add_option("--p", p_arg)->required();

    // Global flags may appear after the subcommand name.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
        for (CLI::App* nested : sc->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);

        if (cmd_gamma->parsed()) {
            Prime p(p_arg);
            emit(g, "gamma", {{"p", std::to_string(p_arg)}}, p_arg, [&] {
                CosetDecomposition dec = CosetDecomposition::build(p);
                Table t;
                t.columns = {"coset", "rep", "element"};
                for (u64 j = 1; j <= p.value(); ++j)
                    for (u64 x : dec.cosets()[j - 1])
                        t.rows.push_back({std::to_string(j), std::to_string(dec.reps()[j - 1]),
                                          std::to_string(x)});
                for (u64 x : dec.p_coset())
                    t.rows.push_back({"0", std::to_string(p.value()), std::to_string(x)});
                return t;
            });
        } else if (cmd_sum->parsed()) {
            Prime p(p_arg);
            emit(g, "sum", {{"p", std::to_string(p_arg)}, {"a", std::to_string(a_arg)}}, p_arg,
                 [&] {
                     SumResult s = heilbronn_sum(p, a_arg);
                     Table t;
                     t.columns = {"quantity", "value"};
                     t.rows = {{"re", fmt_double(s.value.real())},
                               {"im", fmt_double(s.value.imag())},
                               {"abs", fmt_double(s.abs)}};
                     return t;
                 });
        } else if (cmd_scan->parsed()) {
            std::vector<std::pair<std::string, std::string>> flags = {
                {"p", std::to_string(p_arg)},
                {"pmax", std::to_string(pmax_arg)},
                {"cap", std::to_string(cap_arg)}};
            emit(g, "scan", flags, p_arg, [&] {
                std::vector<u64> ps;
                if (pmax_arg >= p_arg)
                    ps = primes_in_range(p_arg, pmax_arg);
                else
                    ps = {p_arg};
                Table t;
                t.columns = {"p", "quantity", "value", "bound_formula", "ratio"};
                for (u64 pv : ps) {
                    BoundReport rep = scan_bounds(Prime(pv), cap_arg);
                    for (const auto& row : rep.rows)
                        t.rows.push_back({std::to_string(pv), row.quantity, row.value,
                                          row.bound_formula, fmt_double(row.ratio)});
                }
                return t;
            });
        } else if (cmd_energy->parsed()) {
            Prime p(p_arg);
            emit(g, "energy", {{"p", std::to_string(p_arg)}, {"k", std::to_string(k_arg)}},
                 p_arg, [&] {
                     Subgroup gam = Subgroup::build(p);
                     BigInt e = k_arg == 2
                                    ? energy(p.squared(), gam.elements(), gam.elements())
                                    : higher_energy(p.squared(), gam.elements(),
                                                    gam.elements(), k_arg);
                     Table t;
                     t.columns = {"quantity", "value"};
                     t.rows = {{"E_" + std::to_string(k_arg) + "(Gamma)", e.str()}};
                     return t;
                 });
        } else if (cmd_tk->parsed()) {
            Prime p(p_arg);
            emit(g, "tk", {{"p", std::to_string(p_arg)}, {"k", std::to_string(k_arg)}}, p_arg,
                 [&] {
                     Subgroup gam = Subgroup::build(p);
                     BigInt v = t_k(p.squared(), gam.elements(), k_arg);
                     Table t;
                     t.columns = {"quantity", "value"};
                     t.rows = {{"T_" + std::to_string(k_arg) + "(Gamma)", v.str()}};
                     return t;
                 });
        } else if (cmd_psi->parsed()) {
            Prime p(p_arg);
            emit(g, "psi", {{"p", std::to_string(p_arg)}, {"k", std::to_string(k_arg)}}, p_arg,
                 [&] {
                     CountTable psi = psi_k(p, k_arg);
                     Table t;
                     t.columns = {"x", "value"};
                     for (u64 x = 0; x < psi.modulus(); ++x)
                         t.rows.push_back({std::to_string(x), psi.get(x).str()});
                     return t;
                 });
        } else if (cmd_cert->parsed()) {
            Prime p(p_arg);
            std::vector<MCell> cells;
            {
                std::stringstream ss(cells_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    auto colon = tok.find(':');
                    if (colon == std::string::npos)
                        throw std::invalid_argument("bad --cells entry: " + tok);
                    cells.push_back(MCell::make(
                        p, static_cast<u32>(std::stoul(tok.substr(0, colon))),
                        static_cast<u32>(std::stoul(tok.substr(colon + 1))), lambda_arg));
                }
            }
            StepanovParams params;
            if (params_arg.empty()) {
                params = default_params(p, cells.size());
                if (params.D == 0)
                    throw std::invalid_argument(
                        "default parameters degenerate (D = 0) at this p; pass --params");
            } else {
                std::stringstream ss(params_arg);
                std::string tok;
                std::vector<u64> v;
                while (std::getline(ss, tok, ',')) v.push_back(std::stoull(tok));
                if (v.size() != 4) throw std::invalid_argument("--params needs A,B,C,D");
                params = {v[0], v[1], v[2], v[3]};
            }
            Certificate cert = build_certificate(p, cells, params);
            if (g.out.empty()) throw std::invalid_argument("stepanov-cert requires --out");
            std::ofstream f(g.out, std::ios::binary);
            f << certificate_to_json(cert);
            u64 points = 0;
            for (const auto& tr : cert.transcript) points += tr.points.size();
            std::cout << "quantity,value\npoints," << points << "\nbound,"
                      << fmt_double(cert.bound()) << "\npsi_degree," << cert.psi.degree()
                      << "\n";
        } else if (cmd_cverify->parsed()) {
            std::ifstream f(cert_file);
            if (!f) throw std::invalid_argument("cannot read certificate: " + cert_file);
            std::ostringstream buf;
            buf << f.rdbuf();
            Certificate cert = certificate_from_json(buf.str());
            CertificateVerification v = verify_certificate(cert);
            Table t;
            t.columns = {"quantity", "value"};
            t.rows = {{"ok", v.ok ? "true" : "false"},
                      {"psi_nonzero", v.psi_nonzero ? "true" : "false"},
                      {"total_points", std::to_string(v.total_points)},
                      {"bound", fmt_double(v.bound)}};
            if (!v.failure.empty()) t.rows.push_back({"failure", v.failure});
            write_output(g, g.format == "json"
                                ? to_json_doc("stepanov-verify", cert.p, t)
                                : to_csv(t));
            return v.ok ? 0 : 1;
        } else if (cmd_lp->parsed()) {
            auto colon = range_arg.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("--range must be pmin:pmax");
            u64 lo = std::stoull(range_arg.substr(0, colon));
            u64 hi = std::stoull(range_arg.substr(colon + 1));
            // lp_scan keeps its own resumable CSV cache; the generic result
            // cache still applies on top when --cache is set.
            std::optional<std::filesystem::path> cdir;
            if (!g.cache_dir.empty()) cdir = g.cache_dir;
            emit(g, "fermat-lp", {{"range", range_arg}}, std::nullopt, [&] {
                auto records = lp_scan(lo, hi, g.threads, cdir);
                Table t;
                t.columns = {"p", "l_p"};
                for (const auto& r : records)
                    t.rows.push_back({std::to_string(r.p), std::to_string(r.l_p)});
                return t;
            });
        } else if (cmd_q->parsed()) {
            Prime p(p_arg);
            emit(g, "fermat-q", {{"p", std::to_string(p_arg)}, {"n", std::to_string(n_arg)}},
                 p_arg, [&] {
                     QuotientValue qv = fermat_quotient(p, n_arg);
                     Table t;
                     t.columns = {"p", "n", "q"};
                     t.rows = {{std::to_string(qv.p), std::to_string(qv.n),
                                std::to_string(qv.q)}};
                     return t;
                 });
        } else if (cmd_nk->parsed()) {
            Prime p(p_arg);
            emit(g, "fermat-nk", {{"p", std::to_string(p_arg)}, {"H", std::to_string(h_arg)}},
                 p_arg, [&] {
                     u64 count = congruence_count(p, h_arg);
                     Table t;
                     t.columns = {"p", "H", "N"};
                     t.rows = {{std::to_string(p_arg), std::to_string(h_arg),
                                std::to_string(count)}};
                     return t;
                 });
        } else if (cmd_verify->parsed()) {
            Prime p(p_arg);
            auto suites = run_verify_suites(p);
            Table t;
            t.columns = {"suite", "status", "detail"};
            bool all_ok = true;
            for (const auto& s : suites) {
                all_ok = all_ok && s.ok;
                t.rows.push_back({s.name, s.ok ? "pass" : "fail", s.detail});
            }
            write_output(g, g.format == "json" ? to_json_doc("verify", p_arg, t) : to_csv(t));
            return all_ok ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
