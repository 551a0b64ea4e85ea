#ifndef MONORES_POSET_HPP
#define MONORES_POSET_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include "monores/complex.hpp"
#include "monores/limits.hpp"
#include "monores/monomial.hpp"

namespace monores {

/// Sorted set of 0-based variable indices.
using IndexSet = std::vector<std::uint32_t>;

using PosetElement = std::variant<Multidegree, IndexSet>;

/**
 * Finite poset on elements 0..size()-1 with attached payloads.
 *
 * Up to kDensePosetLimit elements the order is materialized as a bit
 * matrix; above that the comparator is kept and answers are memoized.
 * Order axioms are verified on construction for posets up to
 * kVerifiedPosetLimit elements.
 */
class FinitePoset {
public:
    using Comparator = std::function<bool(std::size_t, std::size_t)>;

    static constexpr std::size_t kDensePosetLimit = 4096;
    static constexpr std::size_t kVerifiedPosetLimit = 256;

    FinitePoset() = default;
    FinitePoset(std::vector<PosetElement> elements, Comparator leq);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const PosetElement& element(std::size_t i) const { return elements_[i]; }
    const std::vector<PosetElement>& elements() const noexcept { return elements_; }

    bool leq(std::size_t a, std::size_t b) const;
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

    /// Element indices ordered so that a < b implies a appears before b.
    std::vector<std::size_t> linear_extension() const;

    /// Hasse diagram edges (a, b) with a covered by b.
    std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

private:
    struct Memo;

    std::vector<PosetElement> elements_;
    std::vector<boost::dynamic_bitset<>> up_;  // up_[a][b] <=> a <= b, dense mode only
    Comparator cmp_;
    std::shared_ptr<Memo> memo_;
};

/// The lcm-lattice: all lcms of generator subsets, bottom element 1 included.
class LcmLattice {
public:
    LcmLattice(MonomialIdeal ideal, std::vector<Multidegree> elements);

    const MonomialIdeal& ideal() const noexcept { return ideal_; }
    /// Sorted by total degree, then lexicographically; elements()[0] is 1.
    const std::vector<Multidegree>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::optional<std::size_t> index_of(const Multidegree& m) const;
    bool contains(const Multidegree& m) const { return index_of(m).has_value(); }
    const Multidegree& top() const { return elements_.back(); }

    FinitePoset as_poset() const;

private:
    MonomialIdeal ideal_;
    std::vector<Multidegree> elements_;
    std::vector<std::size_t> sorted_index_;  // permutation sorting elements_ lexicographically
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal, const Limits& limits = {});

/// {m' in L : 1 < m' < m} ordered by divisibility. Throws DomainError if m is not in L.
FinitePoset open_interval(const LcmLattice& lattice, const Multidegree& m);

/// No generator properly divides m. Throws DomainError if m is not in L.
bool is_buchberger_degree(const LcmLattice& lattice, const Multidegree& m);
bool is_buchberger_degree(const MonomialIdeal& ideal, const Multidegree& m, const Limits& limits = {});

/// Buchberger degrees of L minus {1}, ordered by divisibility.
FinitePoset buchberger_degree_poset(const LcmLattice& lattice);
FinitePoset buchberger_degree_poset(const MonomialIdeal& ideal, const Limits& limits = {});

/**
 * Distinct sets {i : m'_i = m_i} for m' in the open interval (1, m),
 * ordered by inclusion. Throws DomainError if m is not in L.
 */
FinitePoset agreement_poset(const LcmLattice& lattice, const Multidegree& m);
FinitePoset agreement_poset(const MonomialIdeal& ideal, const Multidegree& m, const Limits& limits = {});

/// Chains of P as faces on the element indices.
SimplicialComplex order_complex(const FinitePoset& poset, std::size_t max_chains = Limits{}.max_chains);

enum class Boundedness {
    /// Common lower bound and common upper bound in P.
    both,
    /// Common upper bound only (lower bound supplied by an adjoined bottom).
    upper_only,
};

/**
 * Crosscut complex on the positions 0..k-1 of `antichain`: subsets with the
 * required bounds in P. Throws DomainError if the elements are comparable.
 */
SimplicialComplex crosscut_complex(const FinitePoset& poset, const std::vector<std::size_t>& antichain,
                                   Boundedness bounds = Boundedness::both,
                                   std::size_t max_faces = Limits{}.max_faces);

/// {"elements": [...], "cover_relations": [[i, j], ...]}
nlohmann::json to_json(const FinitePoset& poset);

}  // namespace monores

#endif  // MONORES_POSET_HPP
