#pragma once

#include <cstdint>

#include "nea/noise.hpp"
#include "nea/problems.hpp"
#include "nea/rng.hpp"

namespace nea {

/// When the first-hitting time clock stops.
///   State:      the maintained solution (after selection) is 1^n; a
///               rejected optimal offspring does not count.
///   Evaluation: an optimal solution is first evaluated, whether or not
///               it is accepted.
/// Both rules count the initial solution (iterations = 0 on an optimal
/// start) and agree whenever evaluation is exact.
enum class HittingRule { State, Evaluation };

struct RunConfig {
    ProblemKind problem = ProblemKind::OneMax;
    std::size_t n = 1;
    NoiseSpec noise;
    SamplingSpec sampling;
    std::uint64_t max_evaluations = 10'000'000;  // censoring cap
    std::uint64_t seed = 0;
    HittingRule hitting = HittingRule::State;
};

struct RunResult {
    std::uint64_t iterations = 0;   // loop iterations until hit
    std::uint64_t evaluations = 0;  // total fitness evaluations performed
    bool hit = false;
    bool censored = false;
    int final_true_fitness = 0;
    std::uint64_t seed = 0;
};

/// Standard mutation: each bit flipped independently with probability
/// exactly 1/n (n = 1 flips the single bit). Consumes n rng draws; the
/// parent is unchanged.
BitString mutate(const BitString& x, Rng& rng);

/// Selection on exact sampled sums: accepts iff
///   offspring_sum / m_offspring >= parent_sum / m_parent
/// evaluated by integer cross-multiplication (128-bit), so ties behave
/// exactly like the >= rule and never depend on float rounding.
bool accept(std::uint64_t parent_sum, std::uint64_t offspring_sum, std::uint64_t m_parent,
            std::uint64_t m_offspring);

/// One run of the (1+1)-EA under prior noise with the reevaluation
/// strategy: each iteration evaluates the mutated offspring and
/// re-evaluates the parent with fresh independent noise (two blocks of m
/// evaluations), after an initial block of m evaluations for the starting
/// solution. Accounting for non-censored runs:
///   evaluations = m * (1 + 2 * iterations).
///
/// The run censors (a normal outcome, not an error) when the next
/// iteration would exceed max_evaluations.
///
/// rng draw order, fixed for reproducibility: initial solution (n draws),
/// its evaluation block, then per iteration mutation (n draws), offspring
/// block, parent block.
RunResult run(const RunConfig& config);

void validate_run_config(const RunConfig& config);

}  // namespace nea
