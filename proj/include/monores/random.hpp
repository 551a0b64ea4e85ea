#ifndef MONORES_RANDOM_HPP
#define MONORES_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "monores/monomial.hpp"

namespace monores {

enum class IdealMode { arbitrary, strongly_generic };

std::string to_string(IdealMode mode);
IdealMode parse_ideal_mode(std::string_view text);

struct IdealRandomSpec {
    std::size_t n = 3;
    std::size_t r = 4;
    Exponent max_degree = 4;
    IdealMode mode = IdealMode::arbitrary;
    std::uint64_t seed = 0;

    /// Throws DomainError when the parameters cannot produce an ideal.
    void validate() const;
};

inline constexpr int kStronglyGenericRetries = 1000;

/**
 * Draws a random ideal as a deterministic function of the spec.
 *
 * Arbitrary mode draws r nonzero vectors uniformly from [0, max_degree]^n and
 * minimalizes, so fewer than r generators may survive. Strongly generic mode
 * assigns each variable distinct positive exponents (or zero) across the
 * generators and rejects draws where minimalization drops a generator.
 */
MonomialIdeal random_ideal(const IdealRandomSpec& spec);

/// Uniform integer in [lo, hi]. Portable across standard libraries, unlike std::uniform_int_distribution.
std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// splitmix64 finalizer; derives independent per-trial seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

}  // namespace monores

#endif  // MONORES_RANDOM_HPP
