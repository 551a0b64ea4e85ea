#ifndef MONORES_HOMOLOGY_HPP
#define MONORES_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "monores/complex.hpp"
#include "monores/limits.hpp"
#include "monores/linalg.hpp"

namespace monores {

/// Coefficient field: characteristic 0 (exact rationals) or a prime p.
class FieldSpec {
public:
    constexpr FieldSpec() = default;
    /// Throws DomainError unless p is 0 or prime.
    explicit FieldSpec(std::uint32_t characteristic);

    static FieldSpec rationals() { return FieldSpec(); }

    std::uint32_t characteristic() const noexcept { return p_; }
    std::string name() const;

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    std::uint32_t p_ = 0;
};

/// The fields every conjecture run covers by default.
std::vector<FieldSpec> default_fields();

/**
 * Simplicial boundary map from dimension d to d - 1. Rows and columns follow
 * the canonical (lexicographic) face order of the complex; the entry at
 * (F minus its j-th vertex, F) is (-1)^j. For d = 0 this is the
 * augmentation onto the empty face.
 */
struct BoundaryMatrix {
    int dimension = 0;
    linalg::SparseMatrix matrix;
};

/// ∂_0, ∂_1, ..., ∂_dim.
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c);

/// Does lower ∘ upper vanish as an integer matrix product?
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

std::size_t rank_over(const linalg::SparseMatrix& m, FieldSpec field);

/// Reduced Betti numbers h̃_{-1}, h̃_0, ..., h̃_dim.
struct HomologyRanks {
    std::vector<std::size_t> reduced;  // reduced[k + 1] = h̃_k

    std::size_t at(int k) const;
    bool all_zero() const;
    std::string to_string() const;

    /// Rank vectors compare equal up to trailing zeros, so complexes of different dimension can match.
    friend bool operator==(const HomologyRanks& a, const HomologyRanks& b);
};

HomologyRanks reduced_homology(const SimplicialComplex& c, FieldSpec field = {});

/// No vertices at all, or vanishing reduced homology.
bool is_acyclic(const SimplicialComplex& c, FieldSpec field = {});

struct IntegralHomology {
    /// free_ranks[k + 1] = rank of the free part of H̃_k(c; Z)
    std::vector<std::size_t> free_ranks;
    /// torsion[k + 1] = invariant factors > 1 of H̃_k(c; Z)
    std::vector<std::vector<linalg::BigInt>> torsion;

    bool torsion_free() const;
    bool all_zero() const;
};

/// Throws CapExceeded above limits.max_integral_faces.
IntegralHomology integral_homology(const SimplicialComplex& c, const Limits& limits = {});

/// "rows cols nnz" header then one "row col value" line per entry.
std::string dump_triplets(const linalg::SparseMatrix& m);

/// Euler characteristic of the reduced chain complex: sum (-1)^k f_k over k >= -1.
long long reduced_euler_characteristic(const SimplicialComplex& c);

}  // namespace monores

#endif  // MONORES_HOMOLOGY_HPP
