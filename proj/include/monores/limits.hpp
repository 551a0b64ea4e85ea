#ifndef MONORES_LIMITS_HPP
#define MONORES_LIMITS_HPP

#include <cstddef>

namespace monores {

/// Enumeration caps. Constructions that would exceed one throw CapExceeded.
struct Limits {
    std::size_t max_generators = 22;
    std::size_t max_faces = std::size_t{1} << 20;
    std::size_t max_lattice = std::size_t{1} << 16;
    std::size_t max_cliques = std::size_t{1} << 18;
    std::size_t max_chains = std::size_t{1} << 20;
    /// Integral homology (Smith form) is only attempted below this many faces.
    std::size_t max_integral_faces = 4096;
};

}  // namespace monores

#endif  // MONORES_LIMITS_HPP
