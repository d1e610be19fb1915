#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nea/noise.hpp"
#include "nea/oracle.hpp"
#include "nea/problems.hpp"
#include "nea/rng.hpp"

namespace nea {

/// Outcome of one numerical hypothesis check at a concrete n.
/// satisfied <=> margin >= 0; margin is the distance of the tightest
/// inequality from its bound (negative when violated). range_ok records
/// whether the inputs lie in the stated parameter ranges of the condition
/// being checked; violations are reported, never rejected.
struct ConditionReport {
    std::string name;
    std::size_t n = 0;
    std::string parameters;  // "p=... q=... m=... c=... l=..." as applicable
    bool satisfied = false;
    std::string worst_case;  // the (j,k), level or solution with the tightest margin
    double margin = 0.0;
    bool range_ok = true;
    std::uint64_t seed = 0;  // Monte-Carlo checks only
};

/// Exact table of P(fhat(x^j) < fhat(x^{k+1})) for OneMax solution
/// classes (x^k = any solution with k ones; the law depends only on k).
/// Both condition checks below share this as their probability source.
class OnemaxClassTable {
public:
    /// Builds the m-fold laws for classes k_min..n; p_less may only be
    /// asked about classes in that band (the near-optimum checks need
    /// just a short band, which keeps large m affordable).
    OnemaxClassTable(std::size_t n, const NoiseSpec& noise, std::uint64_t m,
                     std::size_t k_min = 0);

    /// P(fhat(x^j) < fhat(x^b)) for independent sampled estimates.
    double p_less(std::size_t j, std::size_t b) const;

    std::size_t n() const { return n_; }

private:
    std::size_t n_;
    std::size_t k_min_;
    std::vector<std::vector<double>> cdfs_;  // per class, cdf over sum values
    std::vector<Pmf> pmfs_;                  // m-fold class pmfs
};

/// Condition for the polynomial-regime bound on noisy OneMax: a constant
/// c <= 1/15 and 2 < l <= n/2 with
///   for all j <= k < n:    P(fhat(x^j) < fhat(x^{k+1})) >= 1 - l/n
///   for all j <= k < n-l:  P(fhat(x^j) < fhat(x^{k+1})) >= 1 - c(n-k)/n
/// checked over every j <= k pair (the monotonicity-corrected form).
ConditionReport check_lemma4(std::size_t n, const NoiseSpec& noise, std::uint64_t m, double c,
                             double l);

/// Condition for the exponential-regime bound:  l <= n/4, c >= 16 with
///   for all n-l <= k < n:  P(fhat(x^k) < fhat(x^{k+1})) <= 1 - c(n-k)/n.
ConditionReport check_lemma5(std::size_t n, const NoiseSpec& noise, std::uint64_t m, double c,
                             double l);

/// min over j <= k < n of E(f^n(x^{k+1})) - E(f^n(x^j)) on OneMax, via
/// exact expectations. The minimum separation that sampling amplifies.
double sampling_gap(std::size_t n, const NoiseSpec& noise);

struct DriftEstimate {
    double drift = 0.0;
    double ci95 = 0.0;
};

/// Monte-Carlo estimate of E(X_t - X_{t+1} | X_t = level) where
/// X_t = |x|_0, by sampling states uniformly among bitstrings with
/// `level` zeros and performing one mutation + noisy-selection step.
DriftEstimate empirical_drift(ProblemKind problem, std::size_t n, const NoiseSpec& noise,
                              std::uint64_t m, std::size_t level, std::uint64_t trials, Rng& rng);

/// Exhaustively (n <= 12) compares the closed-form event probabilities
/// and expectations against the exact oracle across solution shapes and a
/// grid of noise parameters (p, q in {0, 0.1, 0.5, 1} and q = 1/n). Each
/// report carries the max absolute deviation as 1e-10 - margin.
std::vector<ConditionReport> verify_closed_forms(std::size_t n);

/// One-line key=value rendering used by the CLI.
std::string report_to_string(const ConditionReport& report);

}  // namespace nea
