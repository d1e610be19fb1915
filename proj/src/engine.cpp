#include "nea/engine.hpp"

#include <stdexcept>

namespace nea {

BitString mutate(const BitString& x, Rng& rng) {
    const double rate = 1.0 / static_cast<double>(x.size());
    BitString y = x;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (rng.bernoulli(rate)) y.bits[i] ^= 1;
    return y;
}

bool accept(std::uint64_t parent_sum, std::uint64_t offspring_sum, std::uint64_t m_parent,
            std::uint64_t m_offspring) {
    using u128 = unsigned __int128;
    return static_cast<u128>(offspring_sum) * m_parent >= static_cast<u128>(parent_sum) * m_offspring;
}

void validate_run_config(const RunConfig& config) {
    if (config.n < 1) throw std::invalid_argument("run: n must be >= 1");
    if (config.sampling.m < 1) throw std::invalid_argument("run: sampling m must be >= 1");
    if (config.max_evaluations < config.sampling.m)
        throw std::invalid_argument("run: max_evaluations must fit the initial evaluation block");
    validate_noise(config.noise);
}

RunResult run(const RunConfig& config) {
    validate_run_config(config);
    Rng rng(config.seed);
    const std::uint64_t m = config.sampling.m;

    RunResult result;
    result.seed = config.seed;

    BitString x = uniform_random_solution(config.n, rng);
    // The initial block estimates fhat(x); under reevaluation the value is
    // never compared against anything, but the evaluations are performed
    // and counted.
    (void)sampled_fitness_sum(config.problem, x, config.noise, {m}, rng);
    result.evaluations = m;

    if (is_optimal(config.problem, x)) {
        result.hit = true;
    } else {
        while (result.evaluations + 2 * m <= config.max_evaluations) {
            const BitString offspring = mutate(x, rng);
            const SampledSum off =
                sampled_fitness_sum(config.problem, offspring, config.noise, {m}, rng);
            const SampledSum par = sampled_fitness_sum(config.problem, x, config.noise, {m}, rng);
            result.evaluations += 2 * m;
            ++result.iterations;
            if (accept(par.sum, off.sum, par.m, off.m)) x = offspring;
            if (is_optimal(config.problem, x) ||
                (config.hitting == HittingRule::Evaluation &&
                 is_optimal(config.problem, offspring))) {
                result.hit = true;
                break;
            }
        }
        result.censored = !result.hit;
    }
    result.final_true_fitness = true_fitness(config.problem, x);
    return result;
}

}  // namespace nea
