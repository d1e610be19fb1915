#pragma once

#include <cstdint>

#include "nea/noise.hpp"
#include "nea/pmf.hpp"
#include "nea/problems.hpp"
#include "nea/rng.hpp"

namespace nea {

/// Exact law of the noisy fitness f^n(x): the mixture
/// (1-p) * point(f(x)) + p * law(f(x')).
///
/// The perturbed law is built exactly:
///   OneMax/BitWise       per-bit Bernoulli convolution (keep 1-bits with
///                        prob 1-q, gain 0-bits with prob q)
///   LeadingOnes/BitWise  prefix tail products P(LO(x') >= j) = prod r_i,
///                        r_i = 1-q if x_i = 1 else q; point masses by
///                        telescoping T(j)*(1-r_j)
///   OneBit               average of the n single-flip outcomes
Pmf noisy_pmf(ProblemKind problem, const BitString& x, const NoiseSpec& noise);

/// Mean of noisy_pmf.
double expected_noisy_fitness(ProblemKind problem, const BitString& x, const NoiseSpec& noise);

/// For OneMax the law of f^n depends on x only through the number of
/// 1-bits; this is the law for the class of solutions with k ones.
Pmf onemax_class_pmf(std::size_t n, std::size_t k, const NoiseSpec& noise);

/// P(f^n(offspring) >= f^n(parent)) under independent noise draws.
double acceptance_probability(ProblemKind problem, const BitString& parent,
                              const BitString& offspring, const NoiseSpec& noise);

/// P(fhat(offspring) >= fhat(parent)) with sample size m, exact via m-fold
/// convolutions. Throws SupportLimitError when m*n exceeds the guard; the
/// caller may fall back to mc_sampled_comparison.
double sampled_acceptance_probability(ProblemKind problem, const BitString& parent,
                                      const BitString& offspring, const NoiseSpec& noise,
                                      std::uint64_t m);

struct McEstimate {
    double estimate = 0.0;
    double ci95 = 0.0;  // normal-approximation 95% half-width
};

/// Monte-Carlo estimate of P(fhat(x) >= fhat(y)); fallback for sample
/// sizes where the exact convolution guard trips.
McEstimate mc_sampled_comparison(ProblemKind problem, const BitString& x, const BitString& y,
                                 const NoiseSpec& noise, std::uint64_t m, std::uint64_t trials,
                                 Rng& rng);

}  // namespace nea
