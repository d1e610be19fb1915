#include "nea/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace nea {

namespace {

// Law of f(x') for a single guaranteed perturbation (the p-mixture is
// applied by the caller).
Pmf perturbed_law(ProblemKind problem, const BitString& x, const NoiseSpec& noise) {
    const std::size_t n = x.size();
    Pmf law(n + 1);
    switch (noise.kind) {
        case NoiseKind::Noiseless:
            law[static_cast<std::size_t>(true_fitness(problem, x))] = 1.0;
            break;
        case NoiseKind::OneBit: {
            // Average of the n single-flip outcomes; O(1) fitness per flip.
            const int lo = leading_ones(x);
            const int k = count_ones(x);
            int run_after_gap = 0;
            for (std::size_t i = static_cast<std::size_t>(lo) + 1; i < n && x.bits[i] == 1; ++i)
                ++run_after_gap;
            for (std::size_t i = 0; i < n; ++i) {
                int f;
                if (problem == ProblemKind::OneMax) {
                    f = x.bits[i] ? k - 1 : k + 1;
                } else if (static_cast<int>(i) < lo) {
                    f = static_cast<int>(i);
                } else if (static_cast<int>(i) == lo) {
                    f = lo + 1 + run_after_gap;  // the first 0-bit becomes 1
                } else {
                    f = lo;
                }
                law[static_cast<std::size_t>(f)] += 1.0 / static_cast<double>(n);
            }
            break;
        }
        case NoiseKind::BitWise: {
            const double q = noise.q;
            if (problem == ProblemKind::OneMax) {
                std::vector<double> acc{1.0};
                acc.reserve(n + 1);
                for (std::size_t i = 0; i < n; ++i) {
                    const double p_one = x.bits[i] ? 1.0 - q : q;
                    acc.push_back(0.0);
                    for (std::size_t v = acc.size() - 1; v > 0; --v)
                        acc[v] = acc[v] * (1.0 - p_one) + acc[v - 1] * p_one;
                    acc[0] *= 1.0 - p_one;
                }
                for (std::size_t v = 0; v <= n; ++v) law[v] = acc[v];
            } else {
                // tail = P(LO(x') >= j); mass[j] = tail * P(bit j wrong).
                double tail = 1.0;
                for (std::size_t j = 0; j < n; ++j) {
                    const double keep = x.bits[j] ? 1.0 - q : q;
                    law[j] = tail * (1.0 - keep);
                    tail *= keep;
                }
                law[n] = tail;
            }
            break;
        }
    }
    return law;
}

}  // namespace

Pmf noisy_pmf(ProblemKind problem, const BitString& x, const NoiseSpec& noise) {
    validate_noise(noise);
    const std::size_t base = static_cast<std::size_t>(true_fitness(problem, x));
    if (noise.kind == NoiseKind::Noiseless || noise.p == 0.0) {
        Pmf out(x.size() + 1);
        out[base] = 1.0;
        return out;
    }
    Pmf out = perturbed_law(problem, x, noise);
    for (auto& w : out.mass) w *= noise.p;
    out[base] += 1.0 - noise.p;
    return out;
}

double expected_noisy_fitness(ProblemKind problem, const BitString& x, const NoiseSpec& noise) {
    return pmf_mean(noisy_pmf(problem, x, noise));
}

Pmf onemax_class_pmf(std::size_t n, std::size_t k, const NoiseSpec& noise) {
    if (k > n) throw std::invalid_argument("onemax_class_pmf: k > n");
    BitString x(n);
    for (std::size_t i = 0; i < k; ++i) x.bits[i] = 1;
    return noisy_pmf(ProblemKind::OneMax, x, noise);
}

double acceptance_probability(ProblemKind problem, const BitString& parent,
                              const BitString& offspring, const NoiseSpec& noise) {
    if (parent.size() != offspring.size())
        throw std::invalid_argument("acceptance_probability: length mismatch");
    return comparison_probability(noisy_pmf(problem, offspring, noise),
                                  noisy_pmf(problem, parent, noise))
        .p_ge;
}

double sampled_acceptance_probability(ProblemKind problem, const BitString& parent,
                                      const BitString& offspring, const NoiseSpec& noise,
                                      std::uint64_t m) {
    if (parent.size() != offspring.size())
        throw std::invalid_argument("sampled_acceptance_probability: length mismatch");
    const Pmf off = m_fold_sum_pmf(noisy_pmf(problem, offspring, noise), m);
    const Pmf par = m_fold_sum_pmf(noisy_pmf(problem, parent, noise), m);
    return comparison_probability(off, par).p_ge;
}

McEstimate mc_sampled_comparison(ProblemKind problem, const BitString& x, const BitString& y,
                                 const NoiseSpec& noise, std::uint64_t m, std::uint64_t trials,
                                 Rng& rng) {
    if (trials < 1) throw std::invalid_argument("mc_sampled_comparison: trials must be >= 1");
    std::uint64_t hits = 0;
    const SamplingSpec sampling{m};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const SampledSum sx = sampled_fitness_sum(problem, x, noise, sampling, rng);
        const SampledSum sy = sampled_fitness_sum(problem, y, noise, sampling, rng);
        if (sx.sum >= sy.sum) ++hits;
    }
    McEstimate r;
    r.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    r.ci95 = 1.96 * std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(trials));
    return r;
}

}  // namespace nea
