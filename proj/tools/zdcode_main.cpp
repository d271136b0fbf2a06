#include "zdcode/errors.hpp"
#include "zdcode/lincode.hpp"
#include "zdcode/modring.hpp"
#include "zdcode/theorems.hpp"
#include "zdcode/zdgraph.hpp"

#include "known_data.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDegenerate = 3;

struct AllowlistEntry {
    std::string kind;
    std::string component;
    std::string note;
};

struct Annotation {
    std::uint64_t n;
    std::uint16_t p;
    std::string note;
};

struct KnownData {
    std::vector<AllowlistEntry> allowlist;
    std::vector<Annotation> annotations;
};

KnownData load_known_data() {
    KnownData kd;
    json j = json::parse(zdcli::kKnownDiscrepancies);
    for (const auto& e : j.value("allowlist", json::array()))
        kd.allowlist.push_back({e.at("kind").get<std::string>(),
                                e.at("component").get<std::string>(),
                                e.at("note").get<std::string>()});
    for (const auto& e : j.value("annotations", json::array()))
        kd.annotations.push_back({e.at("n").get<std::uint64_t>(),
                                  e.at("p").get<std::uint16_t>(),
                                  e.at("note").get<std::string>()});
    return kd;
}

bool is_prime_square(std::uint64_t n) {
    auto f = zdcode::factorize(n);
    return f.size() == 1 && f[0].exponent == 2;
}

// Marks allowlisted mismatches in place; returns true when every mismatch
// in the report is covered.
bool apply_allowlist(zdcode::VerifyReport& r, const KnownData& kd) {
    bool all_known = true;
    for (auto& c : r.checks) {
        if (c.status != zdcode::CheckStatus::Mismatch) continue;
        bool known = false;
        for (const auto& a : kd.allowlist) {
            if (a.component != c.component) continue;
            if (a.kind == "prime_square" && is_prime_square(r.n)) known = true;
            if (known) {
                c.note = (c.note.empty() ? "" : c.note + "; ") +
                         ("known discrepancy: " + a.note);
                break;
            }
        }
        if (!known) all_known = false;
    }
    return all_known;
}

void apply_annotations(zdcode::VerifyReport& r, const KnownData& kd) {
    for (const auto& a : kd.annotations)
        if (a.n == r.n && a.p == r.p) r.notes.push_back(a.note);
}

std::string report_status(const zdcode::VerifyReport& r) {
    if (r.has_mismatch()) return "mismatch";
    if (r.has_unverified()) return "unverified";
    return "match";
}

json distance_json(const zdcode::DistanceBounds& d) {
    return json{{"exact", d.exact()}, {"lo", d.lo}, {"hi", d.hi}};
}

json checks_json(const zdcode::VerifyReport& r) {
    json arr = json::array();
    for (const auto& c : r.checks) {
        json e{{"component", c.component},
               {"status", zdcode::to_string(c.status)},
               {"predicted", c.predicted},
               {"computed", c.computed}};
        if (!c.note.empty()) e["note"] = c.note;
        arr.push_back(e);
    }
    return arr;
}

json verify_json(const zdcode::VerifyReport& r) {
    return json{
        {"n", r.n},
        {"p", r.p},
        {"route", r.route},
        {"status", report_status(r)},
        {"graph",
         {{"vertices", r.vertices},
          {"edges", r.edges},
          {"connected", r.connected},
          {"bipartite", r.bipartite},
          {"min_degree", r.min_deg},
          {"lambda_formula", r.lambda_formula},
          {"lambda_mincut", r.lambda_mincut}}},
        {"code",
         {{"length", r.length},
          {"dimension", r.dim},
          {"distance", distance_json(r.dist)},
          {"method", r.dist_method}}},
        {"checks", checks_json(r)},
        {"notes", r.notes}};
}

void print_verify_text(const zdcode::VerifyReport& r, std::ostream& os) {
    os << "n = " << r.n << ", p = " << r.p << ", route " << r.route << "\n";
    os << "graph: " << r.vertices << " vertices, " << r.edges << " edges, "
       << (r.connected ? "connected" : "disconnected") << ", "
       << (r.bipartite ? "bipartite" : "not bipartite") << ", min degree "
       << r.min_deg << "\n";
    os << "lambda: formula " << r.lambda_formula << ", mincut "
       << r.lambda_mincut << "\n";
    os << "code: length " << r.length << ", dimension " << r.dim
       << ", distance ";
    if (r.dist.exact())
        os << r.dist.lo;
    else
        os << "[" << r.dist.lo << ", " << r.dist.hi << "]";
    os << " (" << r.dist_method << ")\n";
    for (const auto& c : r.checks) {
        os << "check " << c.component << ": " << zdcode::to_string(c.status)
           << " (predicted " << c.predicted << ", computed " << c.computed << ")";
        if (!c.note.empty()) os << " -- " << c.note;
        os << "\n";
    }
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    os << "result: " << report_status(r) << "\n";
}

struct BudgetFlags {
    std::uint64_t exact_budget = std::uint64_t{1} << 24;
    std::uint64_t max_candidates = 30'000'000;
    unsigned max_level = 4;

    zdcode::VerifyOptions to_options() const {
        zdcode::VerifyOptions o;
        o.exact_budget = exact_budget;
        o.search.max_candidates = max_candidates;
        o.search.max_level = max_level;
        return o;
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--exact-budget", exact_budget,
                        "max p^k for full codeword enumeration");
        cmd->add_option("--max-candidates", max_candidates,
                        "candidate budget for the bounded distance search");
        cmd->add_option("--max-level", max_level,
                        "deepest support size for the bounded distance search");
    }
};

int cmd_analyze(std::uint64_t n, std::optional<std::uint16_t> prime,
                bool as_json, const BudgetFlags& budgets) {
    zdcode::Graph g = zdcode::build_graph(n);
    auto classes = zdcode::divisor_classes(n);

    json out{
        {"n", n},
        {"vertices", g.vertex_count()},
        {"edges", g.edge_count()},
        {"edges_formula", zdcode::edge_count_formula(n)},
        {"connected", zdcode::is_connected(g)},
        {"bipartite", zdcode::is_bipartite(g)},
    };
    json cls = json::array();
    for (const auto& c : classes)
        cls.push_back(json{{"d", c.d},
                           {"size", c.members.size()},
                           {"size_formula", zdcode::class_size_formula(n, c.d)},
                           {"members", c.members}});
    out["classes"] = cls;
    if (g.vertex_count() >= 2) {
        out["min_degree"] = zdcode::min_degree(g);
        out["lambda_formula"] = zdcode::edge_connectivity_formula(n);
        out["lambda_mincut"] = zdcode::edge_connectivity_mincut(g).lambda;
    }
    if (prime) {
        if (g.edge_count() == 0)
            throw zdcode::DegenerateInput("analyze: no edges, the code is empty");
        auto m = zdcode::incidence_matrix(g, *prime);
        zdcode::SearchOptions so;
        so.max_candidates = budgets.max_candidates;
        so.max_level = budgets.max_level;
        auto d = zdcode::min_distance_bounds(m, so);
        out["code"] = json{{"p", *prime},
                           {"length", m.cols()},
                           {"dimension", zdcode::dimension(m)},
                           {"distance", distance_json(d)}};
    }

    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "Gamma(Z_" << n << "): " << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges ("
              << (zdcode::is_connected(g) ? "connected" : "disconnected") << ", "
              << (zdcode::is_bipartite(g) ? "bipartite" : "not bipartite")
              << ")\n";
    for (const auto& c : classes) {
        std::cout << "  class d=" << c.d << " size " << c.members.size() << ":";
        for (std::uint64_t x : c.members) std::cout << " " << x;
        std::cout << "\n";
    }
    if (out.contains("lambda_mincut"))
        std::cout << "lambda: formula " << out["lambda_formula"] << ", mincut "
                  << out["lambda_mincut"] << "\n";
    if (out.contains("code")) {
        const auto& c = out["code"];
        std::cout << "code over GF(" << *prime << "): length " << c["length"]
                  << ", dimension " << c["dimension"] << ", distance ";
        if (c["distance"]["exact"].get<bool>())
            std::cout << c["distance"]["lo"] << "\n";
        else
            std::cout << "[" << c["distance"]["lo"] << ", "
                      << c["distance"]["hi"] << "]\n";
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t n, std::uint16_t p, bool as_json,
               const BudgetFlags& budgets) {
    zdcode::VerifyReport r = zdcode::verify(n, p, budgets.to_options());
    KnownData kd = load_known_data();
    apply_allowlist(r, kd);
    apply_annotations(r, kd);
    if (as_json)
        std::cout << verify_json(r).dump(2) << "\n";
    else
        print_verify_text(r, std::cout);
    return r.has_mismatch() ? kExitMismatch : kExitOk;
}

int cmd_sweep(std::uint64_t nmin, std::uint64_t nmax,
              std::vector<std::uint16_t> primes, bool as_json,
              const BudgetFlags& budgets) {
    if (primes.empty()) primes = {2};
    if (nmin > nmax)
        throw zdcode::InvalidArgument("sweep: nmin must not exceed nmax");
    KnownData kd = load_known_data();
    zdcode::SweepResult res =
        zdcode::sweep(nmin, nmax, primes, budgets.to_options());

    std::uint64_t known_mismatches = 0, unexpected_mismatches = 0;
    json rows = json::array();
    for (auto& r : res.reports) {
        bool all_known = apply_allowlist(r, kd);
        apply_annotations(r, kd);
        bool mismatch = r.has_mismatch();
        if (mismatch) (all_known ? known_mismatches : unexpected_mismatches)++;
        json row{{"n", r.n},
                 {"p", r.p},
                 {"route", r.route},
                 {"status", report_status(r)},
                 {"length", r.length},
                 {"dimension", r.dim},
                 {"distance", distance_json(r.dist)},
                 {"lambda_formula", r.lambda_formula},
                 {"lambda_mincut", r.lambda_mincut}};
        if (mismatch) {
            row["known"] = all_known;
            json comps = json::array();
            for (const auto& c : r.checks)
                if (c.status == zdcode::CheckStatus::Mismatch)
                    comps.push_back(c.component);
            row["mismatched_components"] = comps;
        }
        rows.push_back(std::move(row));
    }

    json out{{"nmin", nmin},
             {"nmax", nmax},
             {"primes", primes},
             {"instances", res.instances},
             {"degenerate", res.degenerate},
             {"matched", res.matched},
             {"unverified", res.unverified},
             {"mismatched", res.mismatched},
             {"known_mismatches", known_mismatches},
             {"unexpected_mismatches", unexpected_mismatches},
             {"results", std::move(rows)}};

    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "sweep n in [" << nmin << ", " << nmax << "], primes";
        for (auto p : primes) std::cout << " " << p;
        std::cout << "\n";
        std::cout << "instances " << res.instances << ", degenerate "
                  << res.degenerate << ", matched " << res.matched
                  << ", unverified " << res.unverified << ", mismatched "
                  << res.mismatched << " (" << known_mismatches << " known, "
                  << unexpected_mismatches << " unexpected)\n";
        for (const auto& row : out["results"]) {
            if (row["status"] == "match") continue;
            std::cout << "  n=" << row["n"] << " p=" << row["p"] << " "
                      << row["status"].get<std::string>();
            if (row.contains("known") && row["known"].get<bool>())
                std::cout << " (known)";
            std::cout << "\n";
        }
    }
    return unexpected_mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_export(std::uint64_t n, const std::string& format,
               std::optional<std::uint16_t> prime, const std::string& outfile) {
    zdcode::Graph g = zdcode::build_graph(n);
    std::string payload;
    if (format == "dot") {
        payload = zdcode::to_dot(g);
    } else if (format == "gfmat") {
        if (!prime)
            throw zdcode::InvalidArgument("export: --prime is required for gfmat");
        payload = zdcode::incidence_matrix(g, *prime).to_text();
    } else if (format == "json") {
        json edges = json::array();
        for (const auto& [i, j] : g.edges)
            edges.push_back(json::array({g.vertices[i], g.vertices[j]}));
        json out{{"n", n},
                 {"vertices", g.vertices},
                 {"vertex_gcd", g.vertex_gcd},
                 {"edges", std::move(edges)}};
        payload = out.dump(2) + "\n";
    } else {
        throw zdcode::InvalidArgument("export: unknown format " + format);
    }
    if (outfile.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(outfile, std::ios::binary);
        if (!f) throw zdcode::InvalidArgument("export: cannot open " + outfile);
        f << payload;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"incidence codes of zero-divisor graphs"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    std::uint16_t p = 2;
    std::optional<std::uint16_t> opt_prime;
    bool as_json = false;
    BudgetFlags budgets;

    auto* analyze = app.add_subcommand("analyze", "graph and class structure");
    analyze->add_option("n", n, "modulus")->required();
    std::uint16_t analyze_prime = 0;
    analyze->add_option("--prime", analyze_prime, "also report the code over GF(p)");
    analyze->add_flag("--json", as_json, "JSON output");
    budgets.attach(analyze);

    auto* verify = app.add_subcommand("verify", "check the predictions for one n");
    verify->add_option("n", n, "modulus")->required();
    verify->add_option("--prime", p, "field")->required();
    verify->add_flag("--json", as_json, "JSON output");
    budgets.attach(verify);

    auto* sweep = app.add_subcommand("sweep", "check a range of n");
    std::uint64_t nmin = 4, nmax = 100;
    std::vector<std::uint16_t> primes;
    sweep->add_option("--nmin", nmin, "first modulus");
    sweep->add_option("--nmax", nmax, "last modulus")->required();
    sweep->add_option("--primes", primes, "fields, comma separated")
        ->delimiter(',');
    sweep->add_flag("--json", as_json, "JSON output");
    budgets.attach(sweep);

    auto* exp = app.add_subcommand("export", "emit the graph or matrix");
    std::string format = "dot", outfile;
    exp->add_option("n", n, "modulus")->required();
    exp->add_option("--format", format, "dot, gfmat or json");
    std::uint16_t export_prime = 0;
    exp->add_option("--prime", export_prime, "field for gfmat");
    exp->add_option("-o,--output", outfile, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) {
            if (analyze->count("--prime")) opt_prime = analyze_prime;
            return cmd_analyze(n, opt_prime, as_json, budgets);
        }
        if (verify->parsed()) return cmd_verify(n, p, as_json, budgets);
        if (sweep->parsed()) return cmd_sweep(nmin, nmax, primes, as_json, budgets);
        if (exp->parsed()) {
            if (exp->count("--prime")) opt_prime = export_prime;
            return cmd_export(n, format, opt_prime, outfile);
        }
        return kExitInvalid;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInvalid;
    } catch (const zdcode::DegenerateInput& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const zdcode::InvalidArgument& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
