#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srhecke/suites.hpp"

using namespace srhecke;

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

int emit_reports(const std::vector<Report>& reports,
                 const std::string& format) {
    bool all_pass = true;
    if (format == "csv") {
        std::cout << "identity,params,status,witness,millis\n";
        for (const Report& r : reports) {
            std::ostringstream ps;
            bool first = true;
            for (const auto& [k, v] : r.params) {
                if (!first) ps << " ";
                first = false;
                ps << k << "=" << v;
            }
            std::cout << csv_escape(r.identity) << "," << csv_escape(ps.str())
                      << "," << (r.pass ? "pass" : "fail") << ","
                      << csv_escape(r.witness) << "," << r.millis << "\n";
            all_pass = all_pass && r.pass;
        }
    } else if (format == "text") {
        for (const Report& r : reports) {
            std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.identity;
            for (const auto& [k, v] : r.params)
                std::cout << " " << k << "=" << v;
            if (!r.pass) std::cout << "  [" << r.witness << "]";
            std::cout << "  (" << r.millis << " ms)\n";
            all_pass = all_pass && r.pass;
        }
    } else {
        for (const Report& r : reports) {
            std::cout << r.json() << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg,
               const std::string& format) {
    auto refusal = validate_suite(suite, cfg);
    if (refusal) {
        std::cerr << "error: " << *refusal << "\n";
        return 2;
    }
    return emit_reports(run_suite(suite, cfg), format);
}

int cmd_char(const std::string& alpha_text, const std::string& kind,
             const std::string& spec, int n) {
    std::vector<int> parts;
    try {
        std::istringstream is(alpha_text);
        std::string piece;
        while (std::getline(is, piece, ',')) parts.push_back(std::stoi(piece));
        if (parts.empty()) throw std::invalid_argument("empty");
    } catch (const std::exception&) {
        std::cerr << "error: malformed composition '" << alpha_text << "'\n";
        return 2;
    }
    try {
        if (kind == "qs") {
            WeakComposition alpha(parts);
            if (n > 0 && n != alpha.size()) {
                std::cerr << "error: --n disagrees with the size of alpha\n";
                return 2;
            }
            int np = alpha.size();
            CoeffPoly tmono(1);
            for (int d : alpha.descent_multiset())
                tmono *= CoeffPoly::var("t" + std::to_string(d));
            QSymElt inner(QSymElt::F);
            for (const Permutation& w : min_coset_reps_n(alpha))
                inner.add_term(
                    Composition::from_descents(np, w.inverse().descents()),
                    CoeffPoly::var("q", static_cast<int>(w.inversions())));
            bool unit_t = tmono.terms().size() == 1 &&
                          tmono.terms().begin()->first.empty();
            if (unit_t)
                std::cout << inner.str() << "\n";
            else
                std::cout << tmono.str() << "*(" << inner.str() << ")\n";
            return 0;
        }
        Composition alpha(parts);
        int np = alpha.size();
        NSymElt out;
        if (spec == "t-power")
            out = nc_char_quotient(alpha).substituted(subst_t_power(np));
        else if (spec == "qt")
            out = hall_littlewood(
                      Composition(std::vector<int>(np, 1)), true)
                      .substituted(subst_qt(alpha));
        else if (spec == "lnt")
            out = hall_littlewood(
                      Composition(std::vector<int>(np, 1)), true)
                      .substituted(subst_lnt(alpha));
        else
            out = nc_char_quotient(alpha);
        std::cout << out.str() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_stats(int n, const std::string& stats_text,
              const std::string& format) {
    if (n < 1 || n > 7) {
        std::cerr << "error: n out of range (1..7)\n";
        return 2;
    }
    std::vector<std::string> names;
    std::istringstream is(stats_text);
    std::string piece;
    while (std::getline(is, piece, ',')) names.push_back(piece);
    if (names.empty()) names = {"inv", "maj", "des", "imaj", "ides"};
    auto value = [](const std::string& name, const Permutation& w) -> long {
        if (name == "inv") return w.inversions();
        if (name == "maj") return w.maj();
        if (name == "des") return w.des();
        if (name == "imaj") return w.inverse().maj();
        if (name == "ides") return w.inverse().des();
        throw std::invalid_argument("unknown statistic name: " + name);
    };
    try {
        std::vector<Permutation> perms = all_permutations(n);
        if (format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (const Permutation& w : perms) {
                nlohmann::json row{{"permutation", w.str()}};
                for (const auto& name : names) row[name] = value(name, w);
                rows.push_back(row);
            }
            std::cout << rows.dump() << "\n";
        } else {
            std::cout << "permutation";
            for (const auto& name : names) std::cout << "," << name;
            std::cout << "\n";
            for (const Permutation& w : perms) {
                std::cout << w.str();
                for (const auto& name : names)
                    std::cout << "," << value(name, w);
                std::cout << "\n";
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "0-Hecke module computations on the Stanley-Reisner ring of the "
        "Boolean algebra"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string suite, format = "json";
    long seed = 12345;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--n", cfg.n, "main size parameter");
    verify->add_option("--kmax", cfg.kmax, "chain length / power cap");
    verify->add_option("--degmax", cfg.degmax, "total degree cap");
    verify->add_option("--lmax", cfg.lmax, "auxiliary bound");
    verify->add_option("--workers", cfg.workers, "worker thread count");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--format", format, "json|csv|text");

    std::string alpha_text, kind = "nc", spec = "none";
    int char_n = 0;
    auto* charc = app.add_subcommand("char", "print a characteristic");
    charc->add_option("--alpha", alpha_text, "comma-separated composition")
        ->required();
    charc->add_option("--kind", kind, "nc|qs");
    charc->add_option("--spec", spec, "t-power|qt|lnt|none");
    charc->add_option("--n", char_n, "size check for weak compositions");

    int stats_n = 3;
    std::string stats_list;
    auto* stats = app.add_subcommand("stats", "permutation statistic tables");
    stats->add_option("--n", stats_n, "symmetric group size (1..7)");
    stats->add_option("--stats", stats_list,
                      "comma list from inv,maj,des,imaj,ides");
    stats->add_option("--format", format, "json|csv|text");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        cfg.seed = static_cast<unsigned>(seed);
        return cmd_verify(suite, cfg, format);
    }
    if (charc->parsed()) return cmd_char(alpha_text, kind, spec, char_n);
    return cmd_stats(stats_n, stats_list, format);
}
