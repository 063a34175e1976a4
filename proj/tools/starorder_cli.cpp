// starorder: command-line front end for the star-order library.
//
// Exit codes: 0 success, 1 property violation or negative answer, 2 usage or contract error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starorder/automorphism.hpp"
#include "starorder/errors.hpp"
#include "starorder/harness/hasse.hpp"
#include "starorder/harness/io.hpp"
#include "starorder/harness/suites.hpp"
#include "starorder/penrose.hpp"
#include "starorder/spectral_model.hpp"
#include "starorder/star_order.hpp"

namespace so = starorder;
namespace sh = starorder::harness;

namespace {

so::ComplexMatrix load_matrix(const std::string& path) { return sh::parse_matrix(sh::read_file(path)); }

int emit_report(const so::VerificationReport& r, bool timing) {
    std::cout << so::render(r, timing);
    return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Star partial order toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    so::ToleranceConfig tol;
    app.add_option("--eq-tol", tol.eq_tol, "equality tolerance")->capture_default_str();
    app.add_option("--group-tol", tol.group_tol, "singular value grouping tolerance")->capture_default_str();
    app.add_option("--rank-tol", tol.rank_tol, "relative rank threshold")->capture_default_str();

    std::string path_a;
    std::string path_b;

    auto* check = app.add_subcommand("check", "compare two matrices in star order");
    check->add_option("A", path_a)->required();
    check->add_option("B", path_b)->required();

    auto* decompose = app.add_subcommand("decompose", "Penrose decomposition of a matrix");
    decompose->add_option("A", path_a)->required();

    auto* typesplit = app.add_subcommand("typesplit", "type 1 / type 2 split of a spectral model");
    typesplit->add_option("M", path_a)->required();

    auto* join = app.add_subcommand("join", "least common star upper bound of two matrices");
    join->add_option("A", path_a)->required();
    join->add_option("B", path_b)->required();

    std::vector<std::string> family;
    auto* sup = app.add_subcommand("sup", "supremum of a family below a known bound");
    sup->add_option("--bound", path_b, "upper bound of the family")->required();
    sup->add_option("members", family);

    bool continuous = false;
    auto* apply = app.add_subcommand("apply", "apply an automorphism spec to a matrix");
    apply->add_option("spec", path_a)->required();
    apply->add_option("A", path_b)->required();
    apply->add_flag("--continuous", continuous, "use the polar-form evaluation");

    sh::GeneratorConfig gen;
    std::size_t trials = 200;
    auto* verify = app.add_subcommand("verify", "empirical automorphism check on sampled pairs");
    verify->add_option("spec", path_a)->required();
    verify->add_option("--trials", trials)->capture_default_str();
    verify->add_option("--seed", gen.seed)->capture_default_str();
    verify->add_option("--comparable-fraction", gen.comparable_fraction)->capture_default_str();

    std::vector<std::string> nodes;
    std::string out_path;
    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of star order on matrices, as DOT");
    hasse->add_option("matrices", nodes)->required();
    hasse->add_option("--out", out_path, "output file (stdout when omitted)");

    std::string suite_name;
    std::optional<std::size_t> replay;
    bool timing = false;
    auto* suite = app.add_subcommand("suite", "run a property suite");
    suite->add_option("name", suite_name)->required();
    suite->add_option("--seed", gen.seed)->capture_default_str();
    suite->add_option("--replay", replay, "run only this trial index");
    suite->add_option("--dim-min", gen.dim_min)->capture_default_str();
    suite->add_option("--dim-max", gen.dim_max)->capture_default_str();
    suite->add_option("--magnitude", gen.magnitude)->capture_default_str();
    suite->add_option("--comparable-fraction", gen.comparable_fraction)->capture_default_str();
    suite->add_flag("--timing", timing, "append elapsed time to the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        tol.validate();
        gen.tol = tol;

        if (check->parsed()) {
            const auto a = load_matrix(path_a);
            const auto b = load_matrix(path_b);
            const bool ab = so::star_leq(a, b, tol);
            const bool ba = so::star_leq(b, a, tol);
            std::cout << (ab && ba ? "EQ" : ab ? "LEQ" : ba ? "GEQ" : "INCOMPARABLE") << "\n";
            return ab || ba ? 0 : 1;
        }
        if (decompose->parsed()) {
            const auto pd = so::penrose_decompose(load_matrix(path_a), tol);
            for (const auto& w : pd.warnings) {
                std::cerr << "warning: " << w << "\n";
            }
            std::cout << sh::dump_decomposition(pd);
            return 0;
        }
        if (typesplit->parsed()) {
            const auto split = so::model_type_split(sh::parse_model(sh::read_file(path_a)));
            const nlohmann::json j = {{"type1", nlohmann::json::parse(sh::dump_model(split.type1))},
                                      {"type2", nlohmann::json::parse(sh::dump_model(split.type2))}};
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (join->parsed()) {
            const auto d = so::try_join(load_matrix(path_a), load_matrix(path_b), tol);
            if (!d) {
                std::cout << "NONE\n";
                return 1;
            }
            std::cout << sh::dump_matrix(*d);
            return 0;
        }
        if (sup->parsed()) {
            std::vector<so::ComplexMatrix> members;
            for (const auto& p : family) {
                members.push_back(load_matrix(p));
            }
            std::cout << sh::dump_matrix(so::supremum_with_bound(members, load_matrix(path_b), tol));
            return 0;
        }
        if (apply->parsed()) {
            const auto spec = sh::parse_spec(sh::read_file(path_a), tol);
            const auto a = load_matrix(path_b);
            std::cout << sh::dump_matrix(continuous ? so::apply_continuous(spec, a, tol)
                                                    : so::apply(spec, a, tol));
            return 0;
        }
        if (verify->parsed()) {
            const auto spec = sh::parse_spec(sh::read_file(path_a), tol);
            const auto report = so::verify_automorphism(
                spec, sh::mixed_pair_sampler(spec.dim(), gen), trials, tol);
            return emit_report(report, false);
        }
        if (hasse->parsed()) {
            std::vector<so::ComplexMatrix> mats;
            for (const auto& p : nodes) {
                mats.push_back(load_matrix(p));
            }
            const auto g = sh::hasse(mats, tol, nodes);
            for (const auto& w : g.warnings) {
                std::cerr << "warning: " << w << "\n";
            }
            const std::string dot = sh::emit_dot(g);
            if (out_path.empty()) {
                std::cout << dot;
            } else {
                sh::write_file(out_path, dot);
            }
            return 0;
        }
        if (suite->parsed()) {
            const auto report = replay ? sh::replay_trial(suite_name, gen, *replay)
                                       : sh::run_suite(suite_name, gen);
            return emit_report(report, timing);
        }
    } catch (const so::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
