#include "nea/pmf.hpp"

#include <algorithm>

namespace nea {

double pmf_total(const Pmf& a) {
    double s = 0.0;
    for (double w : a.mass) s += w;
    return s;
}

double pmf_mean(const Pmf& a) {
    double s = 0.0;
    for (std::size_t v = 0; v < a.size(); ++v) s += static_cast<double>(v) * a.mass[v];
    return s;
}

double pmf_variance(const Pmf& a) {
    const double mu = pmf_mean(a);
    double s = 0.0;
    for (std::size_t v = 0; v < a.size(); ++v) {
        const double d = static_cast<double>(v) - mu;
        s += d * d * a.mass[v];
    }
    return s;
}

double pmf_cdf(const Pmf& a, std::int64_t v) {
    if (v < 0) return 0.0;
    double s = 0.0;
    const std::size_t hi = std::min<std::size_t>(a.size(), static_cast<std::size_t>(v) + 1);
    for (std::size_t i = 0; i < hi; ++i) s += a.mass[i];
    return s;
}

Pmf convolve(const Pmf& a, const Pmf& b) {
    Pmf out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = a.mass[i];
        if (ai == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out.mass[i + j] += ai * b.mass[j];
    }
    return out;
}

Pmf m_fold_sum_pmf(const Pmf& a, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("m_fold_sum_pmf: m must be >= 1");
    if (a.size() == 0) throw std::invalid_argument("m_fold_sum_pmf: empty pmf");
    const std::uint64_t points = m * static_cast<std::uint64_t>(a.size() - 1) + 1;
    if (points > kMaxSupportPoints)
        throw SupportLimitError("m-fold support of " + std::to_string(points) +
                                " points exceeds guard of " + std::to_string(kMaxSupportPoints));
    Pmf result = Pmf::point(0);
    Pmf base = a;
    while (m > 0) {
        if (m & 1) result = convolve(result, base);
        m >>= 1;
        if (m > 0) base = convolve(base, base);
    }
    return result;
}

ComparisonProbs comparison_probability(const Pmf& a, const Pmf& b) {
    ComparisonProbs r;
    double cdf_b_below = 0.0;  // P(B < v), accumulated in ascending order
    for (std::size_t v = 0; v < a.size(); ++v) {
        const double bv = v < b.size() ? b.mass[v] : 0.0;
        if (a.mass[v] != 0.0) {
            r.p_gt += a.mass[v] * cdf_b_below;
            r.p_eq += a.mass[v] * bv;
        }
        cdf_b_below += bv;
    }
    r.p_ge = r.p_gt + r.p_eq;
    return r;
}

}  // namespace nea
