#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nea {

/// Dense probability mass function over the integers 0..size()-1
/// (index = value). All our supports are contiguous ranges starting at 0.
struct Pmf {
    std::vector<double> mass;

    Pmf() = default;
    explicit Pmf(std::size_t support_points) : mass(support_points, 0.0) {}

    static Pmf point(std::size_t value) {
        Pmf p(value + 1);
        p.mass[value] = 1.0;
        return p;
    }

    std::size_t size() const { return mass.size(); }
    double operator[](std::size_t v) const { return mass[v]; }
    double& operator[](std::size_t v) { return mass[v]; }
};

double pmf_total(const Pmf& a);
double pmf_mean(const Pmf& a);
double pmf_variance(const Pmf& a);

/// P(value <= v); by exact summation in ascending value order.
double pmf_cdf(const Pmf& a, std::int64_t v);

/// Law of X+Y for independent X~a, Y~b.
Pmf convolve(const Pmf& a, const Pmf& b);

/// Thrown when an exact convolution would exceed the dense-support guard.
struct SupportLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMaxSupportPoints = 10'000'000;

/// Law of the sum of m iid draws from a, by binary-power convolution
/// (log2(m) squarings bound the error accumulation). Throws
/// SupportLimitError if the result support would exceed kMaxSupportPoints.
Pmf m_fold_sum_pmf(const Pmf& a, std::uint64_t m);

struct ComparisonProbs {
    double p_ge = 0.0;  // P(A >= B)
    double p_gt = 0.0;  // P(A > B)
    double p_eq = 0.0;  // P(A = B)
};

/// Exact comparison of independent A~a, B~b via one pass over a against
/// the running cdf of b. p_ge = p_gt + p_eq by construction.
ComparisonProbs comparison_probability(const Pmf& a, const Pmf& b);

}  // namespace nea
