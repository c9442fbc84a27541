#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "lsq/stabilizers.hpp"

using namespace lsq;

namespace {

int env_max_weight(int fallback) {
    const char* v = std::getenv("DSL_MAX_WEIGHT");
    if (!v || !*v) return fallback;
    try {
        int w = std::stoi(v);
        if (w < 1) throw std::invalid_argument("DSL_MAX_WEIGHT must be >= 1");
        return w;
    } catch (const std::exception&) {
        throw CLI::ValidationError("DSL_MAX_WEIGHT", "invalid DSL_MAX_WEIGHT value");
    }
}

Alphabet hint_for_kind(const std::string& kind) {
    if (kind == "coderivation" || kind == "ihara") return Alphabet::X;
    return Alphabet::B;
}

struct VerifyTask {
    std::string claim;
    int default_cap;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for the linearized double shuffle and "
                 "balanced Lie algebras"};
    app.require_subcommand(1);

    std::string space, format = "text", claim, golden_path, kind, expr_a, expr_b;
    int max_weight = 0, weight = 0, depth = 0, jobs = 0;
    bool no_timing = false;

    auto* dims = app.add_subcommand("dims", "print dimension tables");
    dims->add_option("--space", space, "one of liex|liey|lieb|ls|lq|stabx|stabb")->required();
    dims->add_option("--max-weight", max_weight, "maximum weight")->required();
    dims->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* basis = app.add_subcommand("basis", "print a component basis");
    basis->add_option("--space", space)->required();
    basis->add_option("--weight", weight)->required();
    basis->add_option("--depth", depth)->required();

    auto* verify = app.add_subcommand("verify", "run theorem verification");
    verify->add_option("--claim", claim)
        ->required()
        ->check(CLI::IsMember(
            {"stab-ls", "stab-lq", "closure-ls", "closure-lq", "theta", "lemmas", "all"}));
    verify->add_option("--max-weight", max_weight, "cap override (0 = claim default)");
    verify->add_option("--golden", golden_path, "golden file to compare or create");
    verify->add_option("--jobs", jobs, "max concurrent component tasks");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    verify->add_flag("--no-timing", no_timing, "suppress the timing field");

    auto* defect = app.add_subcommand("defect", "print a stabilizer defect");
    defect->add_option("--kind", kind)->required()->check(CLI::IsMember({"coderivation", "tau"}));
    defect->add_option("--psi", expr_a)->required();
    defect->add_option("--arg", expr_b)->required();

    auto* bracket = app.add_subcommand("bracket", "print a Lie bracket");
    bracket->add_option("--kind", kind)->required()->check(CLI::IsMember({"ihara", "ari"}));
    bracket->add_option("--a", expr_a)->required();
    bracket->add_option("--b", expr_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*dims) {
            int cap = env_max_weight(max_weight);
            auto recs = dim_records(space, cap, false);
            if (format == "json") {
                std::cout << dim_records_to_json(recs) << "\n";
            } else if (format == "csv") {
                std::cout << "space,m,n,dim\n";
                for (auto& r : recs)
                    std::cout << r.space << "," << r.m << "," << r.n << "," << r.dim << "\n";
            } else {
                for (auto& r : recs)
                    if (r.dim > 0)
                        std::cout << r.space << "[" << r.m << "," << r.n << "] dim " << r.dim
                                  << "\n";
            }
            return 0;
        }

        if (*basis) {
            SubspaceBasis b = space_basis(space, weight, depth);
            for (auto& e : b.elems) std::cout << e.to_string() << "\n";
            return 0;
        }

        if (*verify) {
            std::vector<VerifyTask> tasks;
            if (claim == "all" || claim == "stab-ls") tasks.push_back({"stab-ls", 9});
            if (claim == "all" || claim == "stab-lq") tasks.push_back({"stab-lq", 6});
            if (claim == "all" || claim == "closure-ls") tasks.push_back({"closure-ls", 10});
            if (claim == "all" || claim == "closure-lq") tasks.push_back({"closure-lq", 7});
            if (claim == "all" || claim == "theta") tasks.push_back({"theta", 7});
            if (claim == "all" || claim == "lemmas") tasks.push_back({"lemmas", 0});
            (void)jobs; // component tasks run sequentially; N only bounds them

            bool all_pass = true;
            for (auto& t : tasks) {
                int cap = env_max_weight(max_weight > 0 ? max_weight : t.default_cap);
                auto start = std::chrono::steady_clock::now();
                VerificationReport rep;
                if (t.claim == "stab-ls") rep = verify_stab_ls(cap);
                else if (t.claim == "stab-lq") rep = verify_stab_lq(cap);
                else if (t.claim == "closure-ls") rep = verify_closure(ClosureSpace::ls, cap);
                else if (t.claim == "closure-lq") rep = verify_closure(ClosureSpace::lq, cap);
                else if (t.claim == "theta") rep = verify_theta(cap);
                else rep = lemma_checks();
                rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                           start)
                                  .count();
                if (!golden_path.empty() && rep.all_pass())
                    rep.merge(golden_check(t.claim, cap, golden_path));
                all_pass = all_pass && rep.all_pass();
                if (format == "json") std::cout << rep.to_json(!no_timing) << "\n";
                else std::cout << rep.to_text() << "\n";
            }
            return all_pass ? 0 : 1;
        }

        if (*defect) {
            if (kind == "coderivation") {
                NCPoly psi = parse_poly(expr_a, Alphabet::X);
                NCPoly arg = parse_poly(expr_b, Alphabet::Y);
                std::cout << coderivation_defect(psi, arg).to_string() << "\n";
            } else {
                NCPoly psi = parse_poly(expr_a, Alphabet::B);
                NCPoly arg = parse_poly(expr_b, Alphabet::B);
                std::cout << tau_defect(psi, arg).to_string() << "\n";
            }
            return 0;
        }

        if (*bracket) {
            Alphabet h = hint_for_kind(kind);
            NCPoly a = parse_poly(expr_a, h);
            NCPoly b = parse_poly(expr_b, h);
            NCPoly r = (kind == "ihara") ? ihara(a, b) : ari(a, b);
            std::cout << r.to_string() << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
