#ifndef MONORES_LINALG_HPP
#define MONORES_LINALG_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monores::linalg {

using BigInt = boost::multiprecision::cpp_int;

struct Entry {
    std::uint32_t row;
    std::int64_t value;
};

/// Column-compressed integer matrix; each column sorted by row, no explicit zeros.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;

    std::size_t nonzeros() const;
};

/// Matrices below this many columns (and with few enough entries) use dense Bareiss.
inline constexpr std::size_t kDenseColumnLimit = 500;
inline constexpr std::size_t kDenseEntryLimit = 250000;

/// Rank over Q by fraction-free elimination; never touches floating point.
std::size_t rank_rational(const SparseMatrix& m);

/// Dense Bareiss elimination; exposed for cross-checking.
std::size_t rank_bareiss_dense(const SparseMatrix& m);

/// Sparse integer elimination with Markowitz-style pivoting and content reduction.
std::size_t rank_integer_sparse(const SparseMatrix& m);

/// Rank over F_p, p prime.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form, all positive.
std::vector<BigInt> smith_invariants(const SparseMatrix& m);

bool is_prime(std::uint32_t p);

}  // namespace monores::linalg

#endif  // MONORES_LINALG_HPP
