#include <doctest.h>

#include <cmath>

#include "nea/oracle.hpp"
#include "testutil.hpp"

using namespace nea;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("noisy pmf frozen examples") {
    SUBCASE("OneMax 11 under bitwise(1, 0.5)") {
        const Pmf p = noisy_pmf(ProblemKind::OneMax, bitstring_from_string("11"),
                                NoiseSpec::bit_wise(1.0, 0.5));
        CHECK(p[0] == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p[2] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("LeadingOnes 10 under bitwise(1, 0.5)") {
        const Pmf p = noisy_pmf(ProblemKind::LeadingOnes, bitstring_from_string("10"),
                                NoiseSpec::bit_wise(1.0, 0.5));
        CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p[1] == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(p[2] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("noiseless is a point mass") {
        const BitString x = bitstring_from_string("1101");
        for (auto problem : {ProblemKind::OneMax, ProblemKind::LeadingOnes}) {
            const Pmf p = noisy_pmf(problem, x, NoiseSpec::noiseless());
            CHECK(p[static_cast<std::size_t>(true_fitness(problem, x))] == 1.0);
        }
    }
}

TEST_CASE("noisy pmf equals the enumeration oracle") {
    Rng rng(201);
    const std::vector<NoiseSpec> noises = {
        NoiseSpec::one_bit(0.3),        NoiseSpec::one_bit(1.0),
        NoiseSpec::bit_wise(0.6, 0.2),  NoiseSpec::bit_wise(1.0, 0.5),
        NoiseSpec::bit_wise(0.25, 1.0), NoiseSpec::noiseless(),
    };
    for (int t = 0; t < 120; ++t) {
        const std::size_t n = 1 + rng.index_below(10);
        const BitString x = uniform_random_solution(n, rng);
        for (const auto& noise : noises) {
            for (auto problem : {ProblemKind::OneMax, ProblemKind::LeadingOnes}) {
                const Pmf got = noisy_pmf(problem, x, noise);
                const Pmf want = testutil::brute_noisy_pmf(problem, x, noise);
                CHECK(testutil::max_abs_diff(got, want) < 1e-12);
                CHECK(std::abs(pmf_total(got) - 1.0) < 1e-12);
                for (double w : got.mass) {
                    CHECK(w >= 0.0);
                    CHECK(w <= 1.0 + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("OneMax law depends on x only through the number of ones") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const NoiseSpec noise = NoiseSpec::bit_wise(0.8, 0.37);
        std::vector<Pmf> class_pmfs;
        for (std::size_t k = 0; k <= n; ++k) class_pmfs.push_back(onemax_class_pmf(n, k, noise));
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            BitString x(n);
            for (std::size_t i = 0; i < n; ++i) x.bits[i] = (bits >> i) & 1;
            const Pmf p = noisy_pmf(ProblemKind::OneMax, x, noise);
            CHECK(testutil::max_abs_diff(
                      p, class_pmfs[static_cast<std::size_t>(count_ones(x))]) < 1e-12);
        }
    }
}

TEST_CASE("OneMax expectations: one-bit equals bitwise(p, 1/n)") {
    for (std::size_t n = 1; n <= 64; ++n) {
        for (double p : {0.0, 0.25, 0.5, 1.0}) {
            const NoiseSpec onebit = NoiseSpec::one_bit(p);
            const NoiseSpec bitwise = NoiseSpec::bit_wise(p, 1.0 / static_cast<double>(n));
            for (std::size_t k = 0; k <= n; ++k) {
                const double a = pmf_mean(onemax_class_pmf(n, k, onebit));
                const double b = pmf_mean(onemax_class_pmf(n, k, bitwise));
                CHECK(std::abs(a - b) < 1e-10);
                // closed form shared by both
                const double nd = static_cast<double>(n);
                CHECK(std::abs(a - (static_cast<double>(k) * (1.0 - 2.0 * p / nd) + p)) < 1e-10);
            }
        }
    }
}

TEST_CASE("OneMax expectation under bitwise(1, q) and the all-ones case") {
    const std::size_t n = 16;
    for (double q : {0.0, 0.1, 0.5, 0.9}) {
        const NoiseSpec noise = NoiseSpec::bit_wise(1.0, q);
        for (std::size_t k = 0; k <= n; ++k) {
            const double mean = pmf_mean(onemax_class_pmf(n, k, noise));
            const double want =
                (1.0 - 2.0 * q) * static_cast<double>(k) + static_cast<double>(n) * q;
            CHECK(std::abs(mean - want) < 1e-10);
        }
        // x = 1^n gives n - nq
        CHECK(std::abs(pmf_mean(noisy_pmf(ProblemKind::OneMax, all_ones(n), noise)) -
                       (static_cast<double>(n) - static_cast<double>(n) * q)) < 1e-10);
    }
}

TEST_CASE("LeadingOnes point masses below the prefix under bitwise(1, q)") {
    for (std::size_t n = 3; n <= 10; ++n) {
        for (std::size_t j = 1; j <= n; ++j) {
            BitString x(n);
            for (std::size_t i = 0; i < j; ++i) x.bits[i] = 1;
            for (double q : {0.05, 0.3, 0.7}) {
                const Pmf pmf = noisy_pmf(ProblemKind::LeadingOnes, x, NoiseSpec::bit_wise(1.0, q));
                for (std::size_t l = 0; l < j; ++l)
                    CHECK(std::abs(pmf[l] - std::pow(1.0 - q, static_cast<double>(l)) * q) < 1e-12);
            }
        }
    }
}

TEST_CASE("LeadingOnes expectation example from the enumerated pmf") {
    CHECK(std::abs(expected_noisy_fitness(ProblemKind::LeadingOnes, bitstring_from_string("10"),
                                          NoiseSpec::bit_wise(1.0, 0.5)) -
                   0.75) < 1e-12);
}

TEST_CASE("acceptance probability") {
    SUBCASE("noiseless comparisons are deterministic") {
        const BitString parent = bitstring_from_string("1100");
        const BitString offspring = bitstring_from_string("1110");
        CHECK(acceptance_probability(ProblemKind::OneMax, parent, offspring,
                                     NoiseSpec::noiseless()) == doctest::Approx(1.0));
        CHECK(acceptance_probability(ProblemKind::OneMax, offspring, parent,
                                     NoiseSpec::noiseless()) == doctest::Approx(0.0));
    }
    SUBCASE("raising the prefix needs the exact flip pattern") {
        // parent 1000 at prefix 1 under bitwise(0.5, 0.25):
        // P(f^n(parent) >= 2) = p (1-q) q = 0.5 * 0.75 * 0.25
        const Pmf p = noisy_pmf(ProblemKind::LeadingOnes, bitstring_from_string("1000"),
                                NoiseSpec::bit_wise(0.5, 0.25));
        double tail = 0.0;
        for (std::size_t v = 2; v < p.size(); ++v) tail += p[v];
        CHECK(tail == doctest::Approx(0.09375).epsilon(1e-12));
    }
    SUBCASE("matches a direct double sum over enumerated laws") {
        Rng rng(202);
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 2 + rng.index_below(7);
            const BitString parent = uniform_random_solution(n, rng);
            const BitString offspring = uniform_random_solution(n, rng);
            const NoiseSpec noise = NoiseSpec::bit_wise(0.4 + 0.6 * rng.u01(), rng.u01());
            for (auto problem : {ProblemKind::OneMax, ProblemKind::LeadingOnes}) {
                const Pmf po = testutil::brute_noisy_pmf(problem, offspring, noise);
                const Pmf pp = testutil::brute_noisy_pmf(problem, parent, noise);
                double want = 0.0;
                for (std::size_t a = 0; a < po.size(); ++a)
                    for (std::size_t b = 0; b < pp.size(); ++b)
                        if (a >= b) want += po[a] * pp[b];
                CHECK(std::abs(acceptance_probability(problem, parent, offspring, noise) - want) <
                      1e-12);
            }
        }
    }
}

TEST_CASE("rejecting a strictly better prefix needs noise on the low bits") {
    // offspring prefix at least i+1 vs parent prefix i under bitwise(p, 1/n):
    // 1 - acceptance <= p (1 - (1-1/n)^{i+1})
    for (std::size_t n = 1; n <= 10; ++n) {
        const double invn = 1.0 / static_cast<double>(n);
        for (double p : {0.25, 1.0}) {
            const NoiseSpec noise = NoiseSpec::bit_wise(p, invn);
            std::vector<Pmf> pmfs;
            pmfs.reserve(std::size_t{1} << n);
            std::vector<int> prefix;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                BitString x(n);
                for (std::size_t i = 0; i < n; ++i) x.bits[i] = (bits >> i) & 1;
                pmfs.push_back(noisy_pmf(ProblemKind::LeadingOnes, x, noise));
                prefix.push_back(leading_ones(x));
            }
            for (std::size_t a = 0; a < pmfs.size(); ++a) {
                for (std::size_t b = 0; b < pmfs.size(); ++b) {
                    if (prefix[b] < prefix[a] + 1) continue;  // need LO(offspring) >= i+1
                    const double acc = comparison_probability(pmfs[b], pmfs[a]).p_ge;
                    const double bound =
                        p * (1.0 - std::pow(1.0 - invn, static_cast<double>(prefix[a] + 1)));
                    CHECK(1.0 - acc <= bound + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("sampled acceptance probability") {
    SUBCASE("m=1 equals the unsampled probability") {
        Rng rng(203);
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 2 + rng.index_below(7);
            const BitString parent = uniform_random_solution(n, rng);
            const BitString offspring = uniform_random_solution(n, rng);
            const NoiseSpec noise = NoiseSpec::bit_wise(rng.u01(), rng.u01());
            CHECK(std::abs(
                      sampled_acceptance_probability(ProblemKind::OneMax, parent, offspring,
                                                     noise, 1) -
                      acceptance_probability(ProblemKind::OneMax, parent, offspring, noise)) <
                  1e-12);
        }
    }
    SUBCASE("noiseless is a step function for any m") {
        const BitString lo = bitstring_from_string("0111");
        const BitString hi = bitstring_from_string("1111");
        for (std::uint64_t m : {1, 4, 9}) {
            CHECK(sampled_acceptance_probability(ProblemKind::OneMax, lo, hi,
                                                 NoiseSpec::noiseless(), m) ==
                  doctest::Approx(1.0));
            CHECK(sampled_acceptance_probability(ProblemKind::OneMax, hi, lo,
                                                 NoiseSpec::noiseless(), m) ==
                  doctest::Approx(0.0));
        }
    }
    SUBCASE("sampling sharpens the positive-gap comparison") {
        const std::size_t n = 20;
        BitString parent(n, 1);
        parent.bits[n - 1] = 0;
        const BitString offspring = all_ones(n);
        double prev = -1.0;
        for (std::uint64_t m : {1, 10, 100}) {
            const double acc = sampled_acceptance_probability(ProblemKind::OneMax, parent,
                                                              offspring, NoiseSpec::one_bit(1.0), m);
            CHECK(acc > prev);
            prev = acc;
        }
    }
}

TEST_CASE("monte-carlo comparison against the exact route") {
    Rng rng(204);
    SUBCASE("noiseless separation gives certainty") {
        const McEstimate est =
            mc_sampled_comparison(ProblemKind::OneMax, bitstring_from_string("111"),
                                  bitstring_from_string("100"), NoiseSpec::noiseless(), 3, 2000,
                                  rng);
        CHECK(est.estimate == 1.0);
        CHECK(est.ci95 == 0.0);
    }
    SUBCASE("agrees with the exact sampled probability") {
        const std::uint64_t trials = 20000;
        int outside = 0;
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 8;
            const BitString x = uniform_random_solution(n, rng);
            const BitString y = uniform_random_solution(n, rng);
            const NoiseSpec noise = NoiseSpec::bit_wise(rng.u01(), rng.u01());
            const std::uint64_t m = 1 + rng.index_below(3);
            const double exact =
                comparison_probability(m_fold_sum_pmf(noisy_pmf(ProblemKind::OneMax, x, noise), m),
                                       m_fold_sum_pmf(noisy_pmf(ProblemKind::OneMax, y, noise), m))
                    .p_ge;
            const McEstimate est =
                mc_sampled_comparison(ProblemKind::OneMax, x, y, noise, m, trials, rng);
            const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
            if (std::abs(est.estimate - exact) > 4.0 * sigma + 1e-15) ++outside;
        }
        CHECK(outside <= 1);
    }
}

TEST_SUITE_END();
