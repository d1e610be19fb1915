#include "nea/verifier.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "nea/engine.hpp"

namespace nea {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string noise_params(const NoiseSpec& noise) {
    switch (noise.kind) {
        case NoiseKind::Noiseless: return "noise=none";
        case NoiseKind::OneBit: return "noise=onebit p=" + fmt(noise.p);
        case NoiseKind::BitWise:
            return "noise=bitwise p=" + fmt(noise.p) + " q=" + fmt(noise.q);
    }
    return "noise=none";
}

}  // namespace

OnemaxClassTable::OnemaxClassTable(std::size_t n, const NoiseSpec& noise, std::uint64_t m,
                                   std::size_t k_min)
    : n_(n), k_min_(k_min) {
    pmfs_.reserve(n + 1 - k_min);
    cdfs_.reserve(n + 1 - k_min);
    for (std::size_t k = k_min; k <= n; ++k) {
        Pmf pmf = m_fold_sum_pmf(onemax_class_pmf(n, k, noise), m);
        std::vector<double> cdf(pmf.size());
        double acc = 0.0;
        for (std::size_t v = 0; v < pmf.size(); ++v) {
            acc += pmf[v];
            cdf[v] = acc;
        }
        pmfs_.push_back(std::move(pmf));
        cdfs_.push_back(std::move(cdf));
    }
}

double OnemaxClassTable::p_less(std::size_t j, std::size_t b) const {
    if (j < k_min_ || b < k_min_) throw std::out_of_range("OnemaxClassTable: class below band");
    // P(A < B) = sum_v P(B = v) * P(A <= v-1)
    const Pmf& pb = pmfs_[b - k_min_];
    const std::vector<double>& ca = cdfs_[j - k_min_];
    double p = 0.0;
    for (std::size_t v = 1; v < pb.size(); ++v) {
        if (pb[v] == 0.0) continue;
        p += pb[v] * ca[std::min(v - 1, ca.size() - 1)];
    }
    return p;
}

ConditionReport check_lemma4(std::size_t n, const NoiseSpec& noise, std::uint64_t m, double c,
                             double l) {
    ConditionReport rep;
    rep.name = "lemma4";
    rep.n = n;
    rep.parameters =
        noise_params(noise) + " m=" + std::to_string(m) + " c=" + fmt(c) + " l=" + fmt(l);
    rep.range_ok = c > 0.0 && c <= 1.0 / 15.0 && l > 2.0 && l <= static_cast<double>(n) / 2.0;

    const OnemaxClassTable table(n, noise, m);
    rep.margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 <= n && k < n; ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
            const double p = table.p_less(j, k + 1);
            const double bound1 = 1.0 - l / static_cast<double>(n);
            double margin = p - bound1;
            std::string family = "all-pairs";
            if (static_cast<double>(k) < static_cast<double>(n) - l) {
                const double bound2 = 1.0 - c * static_cast<double>(n - k) / static_cast<double>(n);
                const double margin2 = p - bound2;
                if (margin2 < margin) {
                    margin = margin2;
                    family = "below-n-minus-l";
                }
            }
            if (margin < rep.margin) {
                rep.margin = margin;
                rep.worst_case = "j=" + std::to_string(j) + " k=" + std::to_string(k) +
                                 " family=" + family + " prob=" + fmt(p);
            }
        }
    }
    rep.satisfied = rep.margin >= 0.0;
    return rep;
}

ConditionReport check_lemma5(std::size_t n, const NoiseSpec& noise, std::uint64_t m, double c,
                             double l) {
    ConditionReport rep;
    rep.name = "lemma5";
    rep.n = n;
    rep.parameters =
        noise_params(noise) + " m=" + std::to_string(m) + " c=" + fmt(c) + " l=" + fmt(l);
    rep.range_ok = c >= 16.0 && l <= static_cast<double>(n) / 4.0 && l >= 1.0;

    rep.margin = std::numeric_limits<double>::infinity();
    const double k_lo = static_cast<double>(n) - l;
    std::size_t k_min = k_lo <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(k_lo));
    const OnemaxClassTable table(n, noise, m, std::min(k_min, n));
    for (std::size_t k = k_min; k < n; ++k) {
        const double p = table.p_less(k, k + 1);
        const double bound = 1.0 - c * static_cast<double>(n - k) / static_cast<double>(n);
        const double margin = bound - p;
        if (margin < rep.margin) {
            rep.margin = margin;
            rep.worst_case = "k=" + std::to_string(k) + " prob=" + fmt(p) + " bound=" + fmt(bound);
        }
    }
    if (k_min >= n) {
        rep.worst_case = "empty-range";
        rep.margin = std::numeric_limits<double>::infinity();
    }
    rep.satisfied = rep.margin >= 0.0;
    return rep;
}

double sampling_gap(std::size_t n, const NoiseSpec& noise) {
    std::vector<double> mean(n + 1);
    for (std::size_t k = 0; k <= n; ++k) mean[k] = pmf_mean(onemax_class_pmf(n, k, noise));
    double gap = std::numeric_limits<double>::infinity();
    double run_max = mean[0];
    for (std::size_t k = 0; k < n; ++k) {
        run_max = std::max(run_max, mean[k]);
        gap = std::min(gap, mean[k + 1] - run_max);
    }
    return gap;
}

DriftEstimate empirical_drift(ProblemKind problem, std::size_t n, const NoiseSpec& noise,
                              std::uint64_t m, std::size_t level, std::uint64_t trials, Rng& rng) {
    if (trials < 1) throw std::invalid_argument("empirical_drift: trials must be >= 1");
    if (level > n) throw std::invalid_argument("empirical_drift: level must be <= n");

    std::vector<std::size_t> positions(n);
    double sum = 0.0;
    double sum_sq = 0.0;
    const SamplingSpec sampling{m};
    for (std::uint64_t t = 0; t < trials; ++t) {
        // Uniform state at the level: zeros at `level` distinct positions.
        for (std::size_t i = 0; i < n; ++i) positions[i] = i;
        BitString x(n, 1);
        for (std::size_t i = 0; i < level; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.index_below(n - i));
            std::swap(positions[i], positions[j]);
            x.bits[positions[i]] = 0;
        }
        const BitString offspring = mutate(x, rng);
        const SampledSum off = sampled_fitness_sum(problem, offspring, noise, sampling, rng);
        const SampledSum par = sampled_fitness_sum(problem, x, noise, sampling, rng);
        const BitString& next = accept(par.sum, off.sum, par.m, off.m) ? offspring : x;
        const double d = static_cast<double>(level) -
                         static_cast<double>(next.size() - static_cast<std::size_t>(count_ones(next)));
        sum += d;
        sum_sq += d * d;
    }
    DriftEstimate est;
    const double nt = static_cast<double>(trials);
    est.drift = sum / nt;
    const double var = trials > 1 ? std::max(0.0, (sum_sq - nt * est.drift * est.drift) / (nt - 1.0))
                                  : 0.0;
    est.ci95 = 1.96 * std::sqrt(var / nt);
    return est;
}

namespace {

double tail_at_least(const Pmf& pmf, std::size_t v) {
    double s = 0.0;
    for (std::size_t i = v; i < pmf.size(); ++i) s += pmf[i];
    return s;
}

double head_at_most(const Pmf& pmf, std::int64_t v) { return pmf_cdf(pmf, v); }

struct DeviationTracker {
    double max_dev = 0.0;
    std::string worst;

    void update(double formula, double oracle, const std::string& where) {
        const double dev = std::abs(formula - oracle);
        if (dev > max_dev) {
            max_dev = dev;
            worst = where + " formula=" + fmt(formula) + " oracle=" + fmt(oracle);
        }
    }

    ConditionReport report(const std::string& name, std::size_t n,
                           const std::string& parameters) const {
        ConditionReport rep;
        rep.name = name;
        rep.n = n;
        rep.parameters = parameters;
        rep.margin = 1e-10 - max_dev;
        rep.satisfied = rep.margin >= 0.0;
        rep.worst_case = worst.empty() ? "none" : worst;
        return rep;
    }
};

}  // namespace

std::vector<ConditionReport> verify_closed_forms(std::size_t n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("verify_closed_forms: n must be in [1,12] (exhaustive sweep)");
    const double nd = static_cast<double>(n);
    const std::vector<double> p_grid{0.0, 0.1, 0.5, 1.0};
    std::vector<double> q_grid{0.0, 0.1, 0.5, 1.0, 1.0 / nd};

    std::vector<BitString> all;
    all.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        BitString x(n);
        for (std::size_t i = 0; i < n; ++i) x.bits[i] = (bits >> i) & 1;
        all.push_back(x);
    }

    std::vector<ConditionReport> reports;

    for (double p : p_grid) {
        for (double q : q_grid) {
            const NoiseSpec noise = NoiseSpec::bit_wise(p, q);
            const std::string params = noise_params(noise);
            DeviationTracker gain, drop, point, tail;
            for (const auto& x : all) {
                const Pmf pmf = noisy_pmf(ProblemKind::LeadingOnes, x, noise);
                const int lo = leading_ones(x);
                const std::string xs = "x=" + to_string(x);
                if (lo < static_cast<int>(n)) {
                    // Raising the prefix needs noise to flip the first
                    // 0-bit and keep the leading 1-bits.
                    gain.update(p * std::pow(1.0 - q, lo) * q,
                                tail_at_least(pmf, static_cast<std::size_t>(lo) + 1),
                                xs + " i=" + std::to_string(lo));
                }
                for (int i = 1; i <= lo; ++i) {
                    // Dropping below i needs noise to flip one of the
                    // first i leading 1-bits.
                    drop.update(p * (1.0 - std::pow(1.0 - q, i)), head_at_most(pmf, i - 1),
                                xs + " i=" + std::to_string(i));
                    // Holding at least l needs the first l bits kept.
                    tail.update(1.0 - p + p * std::pow(1.0 - q, i),
                                tail_at_least(pmf, static_cast<std::size_t>(i)),
                                xs + " l=" + std::to_string(i));
                }
                for (int l = 0; l < lo; ++l)
                    point.update(p * std::pow(1.0 - q, l) * q, pmf[static_cast<std::size_t>(l)],
                                 xs + " l=" + std::to_string(l));
            }
            reports.push_back(gain.report("lo-bitwise-gain-prob", n, params));
            reports.push_back(drop.report("lo-bitwise-drop-prob", n, params));
            reports.push_back(point.report("lo-bitwise-point-prob", n, params));
            reports.push_back(tail.report("lo-bitwise-tail-prob", n, params));

            DeviationTracker mean;
            for (std::size_t k = 0; k <= n; ++k)
                mean.update((1.0 - 2.0 * p * q) * static_cast<double>(k) + nd * p * q,
                            pmf_mean(onemax_class_pmf(n, k, noise)), "k=" + std::to_string(k));
            reports.push_back(mean.report("om-bitwise-mean", n, params));
        }
    }

    for (double p : p_grid) {
        const NoiseSpec noise = NoiseSpec::one_bit(p);
        const std::string params = noise_params(noise);
        DeviationTracker gain, drop, tail;
        for (const auto& x : all) {
            const Pmf pmf = noisy_pmf(ProblemKind::LeadingOnes, x, noise);
            const int lo = leading_ones(x);
            const std::string xs = "x=" + to_string(x);
            if (lo < static_cast<int>(n))
                gain.update(p / nd, tail_at_least(pmf, static_cast<std::size_t>(lo) + 1),
                            xs + " i=" + std::to_string(lo));
            for (int i = 1; i <= lo; ++i) {
                drop.update(p * static_cast<double>(i) / nd, head_at_most(pmf, i - 1),
                            xs + " i=" + std::to_string(i));
                tail.update(1.0 - p * static_cast<double>(i) / nd,
                            tail_at_least(pmf, static_cast<std::size_t>(i)),
                            xs + " l=" + std::to_string(i));
            }
        }
        reports.push_back(gain.report("lo-onebit-gain-prob", n, params));
        reports.push_back(drop.report("lo-onebit-drop-prob", n, params));
        reports.push_back(tail.report("lo-onebit-tail-prob", n, params));

        DeviationTracker mean, equiv;
        const NoiseSpec bitwise_inv_n = NoiseSpec::bit_wise(p, 1.0 / nd);
        for (std::size_t k = 0; k <= n; ++k) {
            const double onebit_mean = pmf_mean(onemax_class_pmf(n, k, noise));
            mean.update(static_cast<double>(k) * (1.0 - 2.0 * p / nd) + p, onebit_mean,
                        "k=" + std::to_string(k));
            equiv.update(pmf_mean(onemax_class_pmf(n, k, bitwise_inv_n)), onebit_mean,
                         "k=" + std::to_string(k));
        }
        reports.push_back(mean.report("om-onebit-mean", n, params));
        reports.push_back(equiv.report("om-onebit-matches-bitwise-mean", n, params));
    }

    return reports;
}

std::string report_to_string(const ConditionReport& report) {
    std::string s = "check=" + report.name + " n=" + std::to_string(report.n);
    if (!report.parameters.empty()) s += " " + report.parameters;
    s += std::string(" satisfied=") + (report.satisfied ? "1" : "0");
    s += " margin=" + fmt(report.margin);
    s += std::string(" range_ok=") + (report.range_ok ? "1" : "0");
    if (!report.worst_case.empty()) s += " worst=\"" + report.worst_case + "\"";
    if (report.seed != 0) s += " seed=" + std::to_string(report.seed);
    return s;
}

}  // namespace nea
