#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nea/rng.hpp"

namespace nea {

/// Fixed-length binary solution. Position 1 of the written form "0101..."
/// is the leftmost character and maps to bits[0].
struct BitString {
    std::vector<std::uint8_t> bits;  // each element is 0 or 1

    BitString() = default;
    explicit BitString(std::size_t n, std::uint8_t fill = 0) : bits(n, fill) {}

    std::size_t size() const { return bits.size(); }
    bool operator==(const BitString& o) const { return bits == o.bits; }
    bool operator!=(const BitString& o) const { return bits != o.bits; }
};

enum class ProblemKind { OneMax, LeadingOnes };

/// Number of 1-bits.
int count_ones(const BitString& x);

/// Length of the maximal all-ones prefix.
int leading_ones(const BitString& x);

/// OneMax -> count of 1-bits; LeadingOnes -> length of the 1-prefix.
int true_fitness(ProblemKind problem, const BitString& x);

/// True iff x = 1^n (equivalent to true_fitness == n for both problems).
bool is_optimal(ProblemKind problem, const BitString& x);

/// Uniform draw from {0,1}^n. Consumes exactly n rng draws (one per bit).
BitString uniform_random_solution(std::size_t n, Rng& rng);

BitString all_ones(std::size_t n);

/// "0101..." rendering, leftmost character = position 1.
std::string to_string(const BitString& x);

/// Inverse of to_string; throws std::invalid_argument on anything but 0/1.
BitString bitstring_from_string(const std::string& s);

ProblemKind parse_problem(const std::string& name);
std::string problem_name(ProblemKind problem);

}  // namespace nea
