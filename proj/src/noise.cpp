#include "nea/noise.hpp"

#include <cstdio>
#include <stdexcept>

namespace nea {

BitString perturb(const BitString& x, const NoiseSpec& noise, Rng& rng) {
    BitString y = x;
    switch (noise.kind) {
        case NoiseKind::Noiseless:
            break;
        case NoiseKind::OneBit: {
            const bool happen = rng.bernoulli(noise.p);
            const std::size_t pos = static_cast<std::size_t>(rng.index_below(x.size()));
            if (happen) y.bits[pos] ^= 1;
            break;
        }
        case NoiseKind::BitWise: {
            const bool happen = rng.bernoulli(noise.p);
            for (std::size_t i = 0; i < x.size(); ++i) {
                const bool flip = rng.bernoulli(noise.q);
                if (happen && flip) y.bits[i] ^= 1;
            }
            break;
        }
    }
    return y;
}

int noisy_fitness(ProblemKind problem, const BitString& x, const NoiseSpec& noise, Rng& rng) {
    return true_fitness(problem, perturb(x, noise, rng));
}

SampledSum sampled_fitness_sum(ProblemKind problem, const BitString& x, const NoiseSpec& noise,
                               SamplingSpec sampling, Rng& rng) {
    if (sampling.m < 1) throw std::invalid_argument("sampling m must be >= 1");
    SampledSum r;
    r.m = sampling.m;
    for (std::uint64_t i = 0; i < sampling.m; ++i)
        r.sum += static_cast<std::uint64_t>(noisy_fitness(problem, x, noise, rng));
    return r;
}

namespace {

double parse_prob(const std::string& text, std::size_t n) {
    if (text == "1/n") {
        if (n == 0) throw std::invalid_argument("cannot resolve 1/n without n");
        return 1.0 / static_cast<double>(n);
    }
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad probability: " + text);
    return v;
}

}  // namespace

NoiseSpec parse_noise(const std::string& text, std::size_t n) {
    NoiseSpec spec;
    if (text == "none") {
        spec = NoiseSpec::noiseless();
    } else if (text.rfind("onebit:p=", 0) == 0) {
        spec = NoiseSpec::one_bit(parse_prob(text.substr(9), n));
    } else if (text.rfind("bitwise:p=", 0) == 0) {
        const std::string rest = text.substr(10);
        const std::size_t comma = rest.find(",q=");
        if (comma == std::string::npos)
            throw std::invalid_argument("bitwise noise needs q: " + text);
        spec = NoiseSpec::bit_wise(parse_prob(rest.substr(0, comma), n),
                                   parse_prob(rest.substr(comma + 3), n));
    } else {
        throw std::invalid_argument("unknown noise spec: " + text +
                                    " (expected none|onebit:p=..|bitwise:p=..,q=..)");
    }
    validate_noise(spec);
    return spec;
}

std::string noise_to_string(const NoiseSpec& noise) {
    char buf[96];
    switch (noise.kind) {
        case NoiseKind::Noiseless:
            return "none";
        case NoiseKind::OneBit:
            std::snprintf(buf, sizeof buf, "onebit:p=%.17g", noise.p);
            return buf;
        case NoiseKind::BitWise:
            std::snprintf(buf, sizeof buf, "bitwise:p=%.17g,q=%.17g", noise.p, noise.q);
            return buf;
    }
    return "none";
}

void validate_noise(const NoiseSpec& noise) {
    if (noise.p < 0.0 || noise.p > 1.0 || noise.q < 0.0 || noise.q > 1.0)
        throw std::invalid_argument("noise probabilities must lie in [0,1]");
}

}  // namespace nea
