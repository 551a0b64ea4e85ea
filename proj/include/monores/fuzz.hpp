#ifndef MONORES_FUZZ_HPP
#define MONORES_FUZZ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "monores/homology.hpp"
#include "monores/limits.hpp"
#include "monores/random.hpp"

namespace monores {

/**
 * One conjecture trial, as written to the JSONL log. Everything except
 * timestamp and version is a pure function of (spec, fields, caps), which is
 * what replay relies on.
 */
struct FuzzRecord {
    std::uint64_t trial = 0;
    IdealRandomSpec spec;  // spec.seed is the per-trial seed
    std::vector<std::uint32_t> fields;
    Limits caps;
    nlohmann::json ideal;
    std::string verdict;
    nlohmann::json checks = nlohmann::json::object();  // check name -> status
    nlohmann::json graph = nlohmann::json::object();   // planar / connected
    nlohmann::json witness;                            // only for candidates
    std::string reverified;                            // verdict of the integral re-check, candidates only
    std::string timestamp;
    std::string version;
};

/// Spec for trial k of a campaign: same shape, seed derived from (base, k).
IdealRandomSpec trial_spec(IdealRandomSpec base, std::uint64_t trial);

FuzzRecord run_conjecture_trial(const IdealRandomSpec& spec, std::uint64_t trial,
                                const std::vector<FieldSpec>& fields, const Limits& limits = {});

nlohmann::json to_json(const FuzzRecord& record);
FuzzRecord fuzz_record_from_json(const nlohmann::json& j);

/// JSON of the deterministic part of a record (no timestamp, no version).
nlohmann::json replay_key(const FuzzRecord& record);

/// Regenerates the instance and reruns the trial. Empty string if the stored record is reproduced exactly.
std::string replay_mismatch(const FuzzRecord& record);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace monores

#endif  // MONORES_FUZZ_HPP
