#ifndef MONORES_MONOMIAL_HPP
#define MONORES_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "monores/errors.hpp"

namespace monores {

using Exponent = std::uint32_t;

/// Largest exponent accepted from outside; keeps lcm and u+1 arithmetic in range.
inline constexpr Exponent kMaxExponent = (Exponent{1} << 31) - 2;

/**
 * Exponent vector of a monomial. Length is the number of variables of the
 * ambient ring and is fixed per ideal.
 */
class Multidegree {
public:
    Multidegree() = default;
    explicit Multidegree(std::size_t n) : exps_(n, 0) {}
    Multidegree(std::initializer_list<Exponent> exps);
    explicit Multidegree(std::vector<Exponent> exps);

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }

    std::span<const Exponent> exponents() const noexcept { return exps_; }
    const std::vector<Exponent>& vec() const noexcept { return exps_; }

    bool is_one() const noexcept;
    std::uint64_t total_degree() const noexcept;

    /// Lexicographic on exponent vectors; shorter vectors sort first.
    friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
    friend bool operator==(const Multidegree&, const Multidegree&) = default;

private:
    std::vector<Exponent> exps_;
};

struct MultidegreeHash {
    std::size_t operator()(const Multidegree& m) const noexcept;
};

/// a_i <= b_i for every i.
bool divides(const Multidegree& a, const Multidegree& b);

/**
 * Proper divisibility: a_i < b_i wherever b_i != 0, and a_i == 0 wherever
 * b_i == 0.
 */
bool properly_divides(const Multidegree& a, const Multidegree& b);

/// Componentwise maximum. Binary form.
Multidegree lcm(const Multidegree& a, const Multidegree& b);

/// Componentwise maximum of a set; the empty set gives the all-zero vector of length n.
Multidegree lcm_of(std::span<const Multidegree> faces, std::size_t n);

/// Componentwise difference b - a. Requires a | b.
Multidegree quotient(const Multidegree& b, const Multidegree& a);

/**
 * A monomial ideal given by its minimal generating set, sorted
 * lexicographically. Vertex numbering everywhere else derives from this
 * order.
 */
class MonomialIdeal {
public:
    /// The zero ideal in n variables.
    explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

    std::size_t num_vars() const noexcept { return n_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool empty() const noexcept { return gens_.empty(); }
    const std::vector<Multidegree>& generators() const noexcept { return gens_; }
    const Multidegree& generator(std::size_t i) const { return gens_[i]; }

    /// lcm of all generators (the top of the lcm-lattice).
    Multidegree top() const;

    /// Index of a generator, or size() when absent.
    std::size_t index_of(const Multidegree& m) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal minimalize(std::span<const Multidegree>, std::size_t);
    MonomialIdeal(std::size_t n, std::vector<Multidegree> gens) : n_(n), gens_(std::move(gens)) {}

    std::size_t n_ = 0;
    std::vector<Multidegree> gens_;
};

/**
 * Canonical minimal generating set of the ideal generated by `raw`.
 * Throws DomainError for the unit monomial, LengthMismatch for vectors
 * not of length n, DomainError for exponents above kMaxExponent.
 */
MonomialIdeal minimalize(std::span<const Multidegree> raw, std::size_t n);
MonomialIdeal minimalize(const std::vector<Multidegree>& raw);

/// Ideal generated by the generators of I that divide m.
MonomialIdeal restrict(const MonomialIdeal& ideal, const Multidegree& m);

/// For each pair of generators and each variable: exponents differ or both vanish.
bool is_strongly_generic(const MonomialIdeal& ideal);

/**
 * Whenever two generators share a positive exponent in some variable, a
 * third generator properly divides their lcm.
 */
bool is_generic(const MonomialIdeal& ideal);

/**
 * I + m^(u+1) M in the larger ring of `extra`, which is the full exponent
 * vector of M: its first n entries must be zero and it must be longer than n.
 * Every generator of I must divide x^u.
 */
MonomialIdeal ibar_extend(const MonomialIdeal& ideal, const Multidegree& u, const Multidegree& extra);

std::string format_monomial(const Multidegree& m);

}  // namespace monores

#endif  // MONORES_MONOMIAL_HPP
