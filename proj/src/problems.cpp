#include "nea/problems.hpp"

#include <stdexcept>

namespace nea {

int count_ones(const BitString& x) {
    int k = 0;
    for (auto b : x.bits) k += b;
    return k;
}

int leading_ones(const BitString& x) {
    int i = 0;
    while (i < static_cast<int>(x.size()) && x.bits[i] == 1) ++i;
    return i;
}

int true_fitness(ProblemKind problem, const BitString& x) {
    return problem == ProblemKind::OneMax ? count_ones(x) : leading_ones(x);
}

bool is_optimal(ProblemKind problem, const BitString& x) {
    return true_fitness(problem, x) == static_cast<int>(x.size());
}

BitString uniform_random_solution(std::size_t n, Rng& rng) {
    BitString x(n);
    for (std::size_t i = 0; i < n; ++i) x.bits[i] = rng.bernoulli(0.5) ? 1 : 0;
    return x;
}

BitString all_ones(std::size_t n) { return BitString(n, 1); }

std::string to_string(const BitString& x) {
    std::string s(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.bits[i]) s[i] = '1';
    return s;
}

BitString bitstring_from_string(const std::string& s) {
    BitString x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw std::invalid_argument("bitstring must consist of 0/1 characters: " + s);
        x.bits[i] = s[i] == '1' ? 1 : 0;
    }
    if (x.size() == 0) throw std::invalid_argument("bitstring must be non-empty");
    return x;
}

ProblemKind parse_problem(const std::string& name) {
    if (name == "onemax") return ProblemKind::OneMax;
    if (name == "leadingones") return ProblemKind::LeadingOnes;
    throw std::invalid_argument("unknown problem: " + name + " (expected onemax|leadingones)");
}

std::string problem_name(ProblemKind problem) {
    return problem == ProblemKind::OneMax ? "onemax" : "leadingones";
}

}  // namespace nea
