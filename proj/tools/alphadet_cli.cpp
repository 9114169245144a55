#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "alphadet/alphadet.hpp"

using namespace alphadet;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

RatMatrix load_matrix(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw error(errc::parse_error, "cannot open matrix file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw error(errc::parse_error, path + ": " + e.what());
    }
    return matrix_from_json(j);
}

struct SuiteOptions {
    int k = 0;
    int n = 0;
    int big_n = 0;
    int m = 0;
    int trials = 5;
    int samples = 0;
    std::string perm;
    std::string mu;
    std::uint64_t seed = 0;
    std::string form = "with-dimension";
    std::string json_path;
};

SuiteReport run_suite(const std::string& name, const SuiteOptions& o)
{
    if (name == "theorem")
        return verify_theorem(o.k, o.n, o.trials, o.seed);
    if (name == "omega") {
        const Perm g = o.perm.empty() ? Perm::identity(o.k * o.n) : parse_perm(o.perm);
        if (o.mu.empty())
            return verify_corollary_omega(o.k, o.n, g);
        return verify_corollary_omega(o.k, o.n, g, parse_partition(o.mu));
    }
    if (name == "chi")
        return verify_corollary_chi(o.k, o.n, o.seed, o.samples > 0 ? o.samples : 200);
    if (name == "stanley")
        return verify_stanley(o.k, o.n, o.m);
    if (name == "zsf")
        return verify_zsf(o.k, o.n, o.seed, o.samples > 0 ? o.samples : 100);
    if (name == "charavg")
        return verify_character_average(o.big_n, o.trials, o.seed,
                                        o.form == "with-dimension" ? CharacterAverageForm::with_dimension
                                                                   : CharacterAverageForm::without_dimension);
    if (name == "weak-alt")
        return verify_weak_alternating(o.big_n, o.k, o.trials, o.seed);
    return verify_fourier_jm(o.big_n);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact alpha-determinants, wreath determinants and character identities"};
    app.require_subcommand(1);
    app.fallthrough();
    int worker_count = 1;
    app.add_option("--workers", worker_count, "Worker threads for parallel reductions")->check(CLI::PositiveNumber);

    std::string matrix_path, alpha_text, beta_text, shape_text, weight_text, cycle_text, perm_text, method = "oracle";
    bool symbolic = false;
    int k = 0;

    auto* adet_cmd = app.add_subcommand("adet", "alpha-determinant of a square matrix");
    adet_cmd->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
    auto* adet_alpha = adet_cmd->add_option("--alpha", alpha_text, "Evaluate at alpha = P/Q");
    adet_cmd->add_flag("--symbolic", symbolic, "Print the polynomial in alpha (default)")->excludes(adet_alpha);

    auto* adet2_cmd = app.add_subcommand("adet2", "two-parameter alpha,beta-determinant");
    adet2_cmd->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
    auto* a2_alpha = adet2_cmd->add_option("--alpha", alpha_text, "alpha = P/Q");
    auto* a2_beta = adet2_cmd->add_option("--beta", beta_text, "beta = P/Q");
    a2_alpha->needs(a2_beta);
    a2_beta->needs(a2_alpha);
    adet2_cmd->add_flag("--symbolic", symbolic, "Print the coefficient grid (default)")->excludes(a2_alpha)->excludes(a2_beta);

    auto* wrdet_cmd = app.add_subcommand("wrdet", "k-wreath determinant of a kn x n matrix");
    wrdet_cmd->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
    wrdet_cmd->add_option("--k", k, "Inflation factor")->required()->check(CLI::PositiveNumber);

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K_{shape,weight}");
    kostka_cmd->add_option("--shape", shape_text)->required();
    kostka_cmd->add_option("--weight", weight_text)->required();
    kostka_cmd->add_option("--method", method)->check(CLI::IsMember({"oracle", "rect-formula"}));

    auto* char_cmd = app.add_subcommand("character", "irreducible character value");
    char_cmd->add_option("--shape", shape_text)->required();
    char_cmd->add_option("--cycle-type", cycle_text)->required();

    auto* omega_cmd = app.add_subcommand("omega", "S_mu-average of a character at g");
    omega_cmd->add_option("--shape", shape_text)->required();
    omega_cmd->add_option("--mu", weight_text)->required();
    omega_cmd->add_option("--perm", perm_text, "1-based images, e.g. 2,1,3")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run an identity-verification suite");
    verify_cmd->require_subcommand(1);
    SuiteOptions so;
    std::string suite_name;
    auto add_common = [&](CLI::App* s, bool seeded) {
        auto* seed = s->add_option("--seed", so.seed, "64-bit seed");
        if (seeded)
            seed->required();
        s->add_option("--json", so.json_path, "Write the report to this file");
        s->callback([&suite_name, s] { suite_name = s->get_name(); });
    };
    auto* v_theorem = verify_cmd->add_subcommand("theorem", "averaging theorem on random kn x n matrices");
    v_theorem->add_option("--k", so.k)->required();
    v_theorem->add_option("--n", so.n)->required();
    v_theorem->add_option("--trials", so.trials);
    add_common(v_theorem, true);
    auto* v_omega = verify_cmd->add_subcommand("omega", "rectangular omega / Kostka formula");
    v_omega->add_option("--k", so.k)->required();
    v_omega->add_option("--n", so.n)->required();
    v_omega->add_option("--perm", so.perm, "g in S_kn (default identity)");
    v_omega->add_option("--mu", so.mu, "weight (default: every weight of kn)");
    add_common(v_omega, false);
    auto* v_chi = verify_cmd->add_subcommand("chi", "rectangular character formula");
    v_chi->add_option("--k", so.k)->required();
    v_chi->add_option("--n", so.n)->required();
    v_chi->add_option("--samples", so.samples, "sample count when kn = 8 (default 200)");
    add_common(v_chi, false);
    auto* v_stanley = verify_cmd->add_subcommand("stanley", "Stanley's character formula");
    v_stanley->add_option("--k", so.k)->required();
    v_stanley->add_option("--n", so.n)->required();
    v_stanley->add_option("--m", so.m)->required();
    add_common(v_stanley, false);
    auto* v_zsf = verify_cmd->add_subcommand("zsf", "three-way zonal spherical function agreement");
    v_zsf->add_option("--k", so.k)->required();
    v_zsf->add_option("--n", so.n)->required();
    v_zsf->add_option("--samples", so.samples, "sample count when kn = 8 (default 100)");
    add_common(v_zsf, false);
    auto* v_weak = verify_cmd->add_subcommand("weak-alt", "weak alternation and divisibility");
    v_weak->add_option("--N", so.big_n)->required();
    v_weak->add_option("--k", so.k)->required();
    v_weak->add_option("--trials", so.trials);
    add_common(v_weak, true);
    auto* v_charavg = verify_cmd->add_subcommand("charavg", "character-weighted sum of adet(A P(sigma))");
    v_charavg->add_option("--N", so.big_n)->required();
    v_charavg->add_option("--trials", so.trials);
    v_charavg->add_option("--form", so.form, "right side with or without the f^lambda factor")
        ->check(CLI::IsMember({"with-dimension", "without-dimension"}));
    add_common(v_charavg, true);
    auto* v_fourier = verify_cmd->add_subcommand("fourier", "Fourier expansion of alpha^nu and the JM product");
    v_fourier->add_option("--N", so.big_n)->required();
    add_common(v_fourier, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_pass : exit_usage;
    }

    try {
        set_workers(static_cast<unsigned>(worker_count));
        if (adet_cmd->parsed()) {
            const RatMatrix a = load_matrix(matrix_path);
            if (!alpha_text.empty())
                std::cout << to_string(adet_at(a, parse_rational(alpha_text))) << '\n';
            else
                std::cout << to_json(adet_poly(a)).dump() << '\n';
        } else if (adet2_cmd->parsed()) {
            const RatMatrix a = load_matrix(matrix_path);
            const PolyAB p = adet2_poly(a);
            if (!alpha_text.empty())
                std::cout << to_string(p(parse_rational(alpha_text), parse_rational(beta_text))) << '\n';
            else
                std::cout << to_json(p).dump() << '\n';
        } else if (wrdet_cmd->parsed()) {
            std::cout << to_string(wrdet(load_matrix(matrix_path), k)) << '\n';
        } else if (kostka_cmd->parsed()) {
            const Partition shape = parse_partition(shape_text);
            const Partition weight = parse_partition(weight_text);
            if (method == "oracle")
                std::cout << kostka_ssyt(shape, weight) << '\n';
            else
                std::cout << to_string(kostka_rect_formula(shape, weight)) << '\n';
        } else if (char_cmd->parsed()) {
            std::cout << character(parse_partition(shape_text), parse_partition(cycle_text)) << '\n';
        } else if (omega_cmd->parsed()) {
            std::cout << to_string(omega(parse_partition(shape_text), parse_partition(weight_text), parse_perm(perm_text)))
                      << '\n';
        } else if (verify_cmd->parsed()) {
            const SuiteReport report = run_suite(suite_name, so);
            const std::string text = report.to_json().dump(2);
            std::cout << text << '\n';
            if (!so.json_path.empty()) {
                std::ofstream out(so.json_path);
                if (!out)
                    throw error(errc::invalid_argument, "cannot write " + so.json_path);
                out << text << '\n';
            }
            return report.passed() ? exit_pass : exit_fail;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_pass;
}
