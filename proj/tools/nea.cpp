#include <CLI11.hpp>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <string>

#include "nea/engine.hpp"
#include "nea/harness.hpp"
#include "nea/oracle.hpp"
#include "nea/verifier.hpp"

namespace {

struct OracleArgs {
    std::string problem = "onemax";
    std::string x;
    std::string y;
    std::string parent;
    std::string offspring;
    std::string noise = "none";
    std::uint64_t m = 1;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
};

int run_command(const std::string& problem, std::size_t n, const std::string& noise,
                std::uint64_t m, std::uint64_t cap, std::uint64_t seed,
                const std::string& hitting) {
    nea::RunConfig cfg;
    cfg.problem = nea::parse_problem(problem);
    cfg.n = n;
    cfg.noise = nea::parse_noise(noise, n);
    cfg.sampling.m = m;
    cfg.max_evaluations = cap;
    cfg.seed = seed;
    if (hitting == "state") cfg.hitting = nea::HittingRule::State;
    else if (hitting == "evaluation") cfg.hitting = nea::HittingRule::Evaluation;
    else throw std::invalid_argument("hitting must be state|evaluation");
    const nea::RunResult r = nea::run(cfg);
    std::printf("problem=%s n=%zu noise=%s m=%" PRIu64 " max_evaluations=%" PRIu64
                " hitting=%s iterations=%" PRIu64 " evaluations=%" PRIu64
                " hit=%d censored=%d final_true_fitness=%d seed=%" PRIu64 "\n",
                problem.c_str(), n, nea::noise_to_string(cfg.noise).c_str(), m, cap,
                hitting.c_str(), r.iterations, r.evaluations, r.hit ? 1 : 0, r.censored ? 1 : 0,
                r.final_true_fitness, r.seed);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(1+1)-EA laboratory for OneMax/LeadingOnes under prior noise"};
    app.require_subcommand(1);

    // ---- run ----
    std::string run_problem = "onemax", run_noise = "none", run_hitting = "state";
    std::size_t run_n = 16;
    std::uint64_t run_m = 1, run_cap = 10000000, run_seed = 1;
    auto* cmd_run = app.add_subcommand("run", "execute a single run, print it as key=value");
    cmd_run->add_option("--problem", run_problem, "onemax|leadingones");
    cmd_run->add_option("--n", run_n, "problem size")->required();
    cmd_run->add_option("--noise", run_noise, "none|onebit:p=..|bitwise:p=..,q=.. (1/n allowed)");
    cmd_run->add_option("--m", run_m, "sample size (1 = sampling off)");
    cmd_run->add_option("--cap", run_cap, "censoring cap on evaluations");
    cmd_run->add_option("--seed", run_seed, "run seed");
    cmd_run->add_option("--hitting", run_hitting, "state|evaluation");

    // ---- oracle ----
    OracleArgs oa;
    auto* cmd_oracle = app.add_subcommand("oracle", "exact distributions and probabilities");
    cmd_oracle->require_subcommand(1);
    auto* o_pmf = cmd_oracle->add_subcommand("pmf", "CSV rows value,mass of the noisy fitness law");
    o_pmf->add_option("--problem", oa.problem);
    o_pmf->add_option("--x", oa.x)->required();
    o_pmf->add_option("--noise", oa.noise);
    o_pmf->add_option("--m", oa.m, "m-fold sampled sum law");
    auto* o_mean = cmd_oracle->add_subcommand("mean", "expected noisy fitness");
    o_mean->add_option("--problem", oa.problem);
    o_mean->add_option("--x", oa.x)->required();
    o_mean->add_option("--noise", oa.noise);
    auto* o_accept = cmd_oracle->add_subcommand("accept", "P(fhat(offspring) >= fhat(parent))");
    o_accept->add_option("--problem", oa.problem);
    o_accept->add_option("--parent", oa.parent)->required();
    o_accept->add_option("--offspring", oa.offspring)->required();
    o_accept->add_option("--noise", oa.noise);
    o_accept->add_option("--m", oa.m);
    auto* o_mc = cmd_oracle->add_subcommand("mc", "Monte-Carlo P(fhat(x) >= fhat(y))");
    o_mc->add_option("--problem", oa.problem);
    o_mc->add_option("--x", oa.x)->required();
    o_mc->add_option("--y", oa.y)->required();
    o_mc->add_option("--noise", oa.noise);
    o_mc->add_option("--m", oa.m);
    o_mc->add_option("--trials", oa.trials);
    o_mc->add_option("--seed", oa.seed);

    // ---- experiment ----
    std::string exp_config, exp_out;
    std::size_t exp_workers = 1;
    std::uint64_t exp_seed = 0;
    bool exp_seed_set = false;
    auto* cmd_exp = app.add_subcommand("experiment", "n-grid sweep writing a figure-ready CSV");
    cmd_exp->add_option("--config", exp_config, "key=value config file")->required();
    cmd_exp->add_option("--workers", exp_workers, "worker threads");
    cmd_exp->add_option("--out", exp_out, "override the config output path");
    cmd_exp->add_option("--master-seed", exp_seed, "override the config master seed")
        ->each([&](const std::string&) { exp_seed_set = true; });

    // ---- verify ----
    std::string v_check, v_problem = "onemax", v_noise = "none", v_sign = "any";
    std::size_t v_n = 16, v_level = 0;
    std::uint64_t v_m = 1, v_trials = 100000, v_seed = 1;
    double v_c = 1.0 / 15.0, v_l = 4.0, v_expect = 0.0, v_tol = 1e-10;
    bool v_expect_set = false;
    auto* cmd_verify = app.add_subcommand("verify", "numerical condition checks, key=value lines");
    cmd_verify->add_option("--check", v_check, "lemma4|lemma5|gap|forms|drift")->required();
    cmd_verify->add_option("--problem", v_problem);
    cmd_verify->add_option("--n", v_n);
    cmd_verify->add_option("--noise", v_noise, "accepts schedule forms, resolved at n");
    cmd_verify->add_option("--m", v_m);
    cmd_verify->add_option("--c", v_c);
    cmd_verify->add_option("--l", v_l);
    cmd_verify->add_option("--level", v_level, "drift: number of 0-bits");
    cmd_verify->add_option("--trials", v_trials);
    cmd_verify->add_option("--seed", v_seed);
    cmd_verify->add_option("--expect", v_expect, "gap: expected value")
        ->each([&](const std::string&) { v_expect_set = true; });
    cmd_verify->add_option("--tol", v_tol, "gap: tolerance on --expect");
    cmd_verify->add_option("--expect-sign", v_sign, "drift: pos|neg|any at 3 sigma");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed())
            return run_command(run_problem, run_n, run_noise, run_m, run_cap, run_seed,
                               run_hitting);

        if (cmd_oracle->parsed()) {
            const nea::ProblemKind problem = nea::parse_problem(oa.problem);
            if (o_pmf->parsed()) {
                const nea::BitString x = nea::bitstring_from_string(oa.x);
                nea::Pmf pmf = nea::noisy_pmf(problem, x, nea::parse_noise(oa.noise, x.size()));
                if (oa.m > 1) pmf = nea::m_fold_sum_pmf(pmf, oa.m);
                std::printf("value,mass\n");
                for (std::size_t v = 0; v < pmf.size(); ++v)
                    std::printf("%zu,%.17g\n", v, pmf[v]);
            } else if (o_mean->parsed()) {
                const nea::BitString x = nea::bitstring_from_string(oa.x);
                std::printf("x=%s mean=%.17g\n", nea::to_string(x).c_str(),
                            nea::expected_noisy_fitness(problem, x,
                                                        nea::parse_noise(oa.noise, x.size())));
            } else if (o_accept->parsed()) {
                const nea::BitString parent = nea::bitstring_from_string(oa.parent);
                const nea::BitString offspring = nea::bitstring_from_string(oa.offspring);
                const double p = nea::sampled_acceptance_probability(
                    problem, parent, offspring, nea::parse_noise(oa.noise, parent.size()), oa.m);
                std::printf("parent=%s offspring=%s m=%" PRIu64 " p_accept=%.17g\n",
                            nea::to_string(parent).c_str(), nea::to_string(offspring).c_str(),
                            oa.m, p);
            } else if (o_mc->parsed()) {
                const nea::BitString x = nea::bitstring_from_string(oa.x);
                const nea::BitString y = nea::bitstring_from_string(oa.y);
                nea::Rng rng(oa.seed);
                const nea::McEstimate est = nea::mc_sampled_comparison(
                    problem, x, y, nea::parse_noise(oa.noise, x.size()), oa.m, oa.trials, rng);
                std::printf("estimate=%.17g ci95=%.17g trials=%" PRIu64 " seed=%" PRIu64 "\n",
                            est.estimate, est.ci95, oa.trials, oa.seed);
            }
            return 0;
        }

        if (cmd_exp->parsed()) {
            nea::ExperimentConfig cfg = nea::load_experiment_config(exp_config);
            if (!exp_out.empty()) cfg.out_path = exp_out;
            if (exp_seed_set) cfg.master_seed = exp_seed;
            const auto rows = nea::run_experiment(cfg, exp_workers);
            nea::write_csv(rows, cfg.out_path);
            std::printf("rows=%zu out=%s\n", rows.size(), cfg.out_path.c_str());
            return 0;
        }

        if (cmd_verify->parsed()) {
            const nea::NoiseSpec noise =
                nea::parse_noise_family(v_noise).resolve(v_n);
            bool ok = true;
            if (v_check == "lemma4") {
                const auto rep = nea::check_lemma4(v_n, noise, v_m, v_c, v_l);
                std::printf("%s\n", nea::report_to_string(rep).c_str());
                ok = rep.satisfied;
            } else if (v_check == "lemma5") {
                const auto rep = nea::check_lemma5(v_n, noise, v_m, v_c, v_l);
                std::printf("%s\n", nea::report_to_string(rep).c_str());
                ok = rep.satisfied;
            } else if (v_check == "gap") {
                const double gap = nea::sampling_gap(v_n, noise);
                ok = !v_expect_set || std::abs(gap - v_expect) <= v_tol;
                std::printf("check=gap n=%zu noise=%s gap=%.17g satisfied=%d\n", v_n,
                            nea::noise_to_string(noise).c_str(), gap, ok ? 1 : 0);
            } else if (v_check == "forms") {
                for (const auto& rep : nea::verify_closed_forms(v_n)) {
                    std::printf("%s\n", nea::report_to_string(rep).c_str());
                    ok = ok && rep.satisfied;
                }
            } else if (v_check == "drift") {
                nea::Rng rng(v_seed);
                const auto est =
                    nea::empirical_drift(nea::parse_problem(v_problem), v_n, noise, v_m, v_level,
                                         v_trials, rng);
                const double three_sigma = est.ci95 / 1.96 * 3.0;
                if (v_sign == "pos") ok = est.drift > three_sigma;
                else if (v_sign == "neg") ok = est.drift < -three_sigma;
                else if (v_sign == "any") ok = true;
                else throw std::invalid_argument("expect-sign must be pos|neg|any");
                std::printf("check=drift problem=%s n=%zu noise=%s m=%" PRIu64 " level=%zu"
                            " trials=%" PRIu64 " drift=%.17g ci95=%.17g satisfied=%d seed=%" PRIu64
                            "\n",
                            v_problem.c_str(), v_n, nea::noise_to_string(noise).c_str(), v_m,
                            v_level, v_trials, est.drift, est.ci95, ok ? 1 : 0, v_seed);
            } else {
                throw std::invalid_argument("unknown check: " + v_check);
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
