#ifndef MONORES_RESOLUTION_HPP
#define MONORES_RESOLUTION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "monores/complex.hpp"
#include "monores/homology.hpp"
#include "monores/limits.hpp"
#include "monores/monomial.hpp"

namespace monores {

// ---------------------------------------------------------------------------
// Homogenized cellular chain complex

/// One nonzero entry sign * x^monomial of a differential, at (row, col).
struct DifferentialEntry {
    std::uint32_t row;
    std::uint32_t col;
    int sign;
    Multidegree monomial;
};

/**
 * The cellular free complex of a labeled simplicial complex. Homological
 * index i has one basis element per face of dimension i, in degree equal to
 * the face label. differentials[i] maps index i to index i - 1 for i >= 1;
 * differentials[0] is the augmentation onto I with rows = 1 and monomial =
 * the generator.
 */
struct FreeResolutionDescription {
    MonomialIdeal ideal;
    std::vector<std::vector<std::pair<Face, Multidegree>>> basis;
    std::vector<std::vector<DifferentialEntry>> differentials;

    std::vector<std::size_t> ranks() const;
    /// Entries rendered as "±x^(e1,...,en)", one matrix per block.
    std::string dump() const;
};

FreeResolutionDescription homogenized_resolution(const LabeledComplex& c);

/**
 * Symbolic check that consecutive differentials compose to zero, including
 * the augmentation. Returns an empty string on success, otherwise a
 * description of the first nonzero entry.
 */
std::string check_differentials_square_zero(const FreeResolutionDescription& res);

// ---------------------------------------------------------------------------
// Betti tables

class BettiTable {
public:
    using Key = std::pair<int, Multidegree>;

    void add(int i, const Multidegree& m, std::size_t rank);
    std::size_t at(int i, const Multidegree& m) const;
    const std::map<Key, std::size_t>& entries() const noexcept { return entries_; }
    /// Sum over degrees for each homological index 0..max.
    std::vector<std::size_t> totals() const;

    nlohmann::json to_json() const;
    std::string to_text() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<Key, std::size_t> entries_;  // nonzero entries only
};

// ---------------------------------------------------------------------------
// Verification reports

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    nlohmann::json witness;
};

class VerificationReport {
public:
    void pass(const std::string& name, const std::string& detail = {});
    void fail(const std::string& name, const std::string& detail, nlohmann::json witness = {});
    void skip(const std::string& name, const std::string& reason);
    void check(const std::string& name, bool ok, const std::string& detail_on_fail, nlohmann::json witness = {});
    /// Appends every check of `other`, prefixing names with `prefix`.
    void merge(const VerificationReport& other, const std::string& prefix = {});

    void set_fact(const std::string& key, nlohmann::json value) { facts_[key] = std::move(value); }
    const nlohmann::json& facts() const noexcept { return facts_; }

    const std::vector<CheckResult>& checks() const noexcept { return checks_; }
    const CheckResult* find(const std::string& name) const;
    bool all_passed() const;  // no check failed
    bool status_is(const std::string& name, CheckStatus s) const;

    nlohmann::json to_json() const;
    std::string to_text() const;

private:
    std::vector<CheckResult> checks_;
    nlohmann::json facts_ = nlohmann::json::object();
};

// ---------------------------------------------------------------------------
// Criteria

/**
 * Exactness test: every Δ[m] for m in L_I minus {1} is acyclic over the
 * field. Degrees outside the lattice need no test: Δ[m] only depends on
 * which generators divide m, so it equals Δ[m'] for m' the lcm of those.
 * Failures carry the first offending m (lattice order) and its homology.
 */
VerificationReport supports_resolution(const LabeledComplex& c, FieldSpec field = {}, const Limits& limits = {});

/// No face and facet-of-it pair shares a label.
bool is_minimal_complex(const LabeledComplex& c);

/// Scarf complex equals Buchberger complex.
bool buchberger_minimality(const MonomialIdeal& ideal, const Limits& limits = {});

/// Counts faces by (dimension, label). Throws PreconditionError unless c is minimal and resolves.
BettiTable betti_from_complex(const LabeledComplex& c, FieldSpec field = {}, const Limits& limits = {});

/// β_{i,m} = h̃_{i-1} of the order complex of (1, m), over all m in L_I minus {1}.
BettiTable betti_from_intervals(const MonomialIdeal& ideal, FieldSpec field = {}, const Limits& limits = {});

/// β_{i,m} = h̃_{i-1}(B_m(I)) at Buchberger degrees, zero elsewhere.
BettiTable betti_from_agreement(const MonomialIdeal& ideal, FieldSpec field = {}, const Limits& limits = {});

/// Subset count above which the all-subsets scan falls back to faces of the Buchberger complex.
inline constexpr std::size_t kSubsetScanLimit = 12;

VerificationReport verify_scarf_equivalence(const MonomialIdeal& ideal, const Limits& limits = {});

/// Skipped when I is not generic; PreconditionError when u or M are unsuitable.
VerificationReport verify_ibar(const MonomialIdeal& ideal, const Multidegree& u, const Multidegree& extra,
                               FieldSpec field = {}, const Limits& limits = {});

inline constexpr const char* kVerdictConsistent = "consistent";
inline constexpr const char* kVerdictCandidate = "CANDIDATE COUNTEREXAMPLE";
inline constexpr const char* kVerdictSkipped = "skipped";

/**
 * Homology of the clique complex of the Buchberger graph over each field,
 * plus integral homology when small enough. Fact "verdict" is one of
 * the kVerdict* strings; a consistent verdict is evidence, not a proof of
 * contractibility.
 */
VerificationReport conjecture_evidence(const MonomialIdeal& ideal, const std::vector<FieldSpec>& fields,
                                       const Limits& limits = {});

/// Homology-level checks of the lcm-lattice lemmas and the crosscut identification.
VerificationReport lemma_battery(const MonomialIdeal& ideal, FieldSpec field = {}, const Limits& limits = {});

}  // namespace monores

#endif  // MONORES_RESOLUTION_HPP
