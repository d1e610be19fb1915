#pragma once

#include <cstdint>
#include <string>

#include "nea/problems.hpp"
#include "nea/rng.hpp"

namespace nea {

enum class NoiseKind { Noiseless, OneBit, BitWise };

/// Prior noise model. Noiseless behaves exactly like OneBit{p=0} and like
/// BitWise with p=0 or q=0, but consumes a different rng draw budget (see
/// perturb).
struct NoiseSpec {
    NoiseKind kind = NoiseKind::Noiseless;
    double p = 0.0;  // probability that the perturbation happens at all
    double q = 0.0;  // per-bit flip probability (BitWise only)

    static NoiseSpec noiseless() { return {}; }
    static NoiseSpec one_bit(double p) { return {NoiseKind::OneBit, p, 0.0}; }
    static NoiseSpec bit_wise(double p, double q) { return {NoiseKind::BitWise, p, q}; }
};

/// Number of independent noisy evaluations averaged per fitness estimate.
/// m = 1 means sampling is off.
struct SamplingSpec {
    std::uint64_t m = 1;
};

/// Evaluation copy x' of x. The input is never modified.
///
/// Fixed rng draw budget per call (always consumed, whether or not the
/// perturbation happens), so that a seed reproduces a run bit-exactly:
///   Noiseless: 0 draws
///   OneBit:    2 draws (happen?, position)
///   BitWise:   1 + n draws (happen?, one per bit)
BitString perturb(const BitString& x, const NoiseSpec& noise, Rng& rng);

/// true_fitness of a fresh perturbation; one perturbation per call.
int noisy_fitness(ProblemKind problem, const BitString& x, const NoiseSpec& noise, Rng& rng);

/// Sum of m independent noisy evaluations. The average is the exact
/// rational sum/m; comparisons must cross-multiply integers rather than
/// divide (see accept in engine.hpp).
struct SampledSum {
    std::uint64_t sum = 0;
    std::uint64_t m = 1;
};
SampledSum sampled_fitness_sum(ProblemKind problem, const BitString& x, const NoiseSpec& noise,
                               SamplingSpec sampling, Rng& rng);

/// Text forms: "none", "onebit:p=<float>", "bitwise:p=<float>,q=<float>".
/// p and q also accept the symbol "1/n", resolved against the given n.
NoiseSpec parse_noise(const std::string& text, std::size_t n);
std::string noise_to_string(const NoiseSpec& noise);

void validate_noise(const NoiseSpec& noise);

}  // namespace nea
