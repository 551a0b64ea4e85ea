#include "monores/fuzz.hpp"

#include <chrono>
#include <ctime>

#include "monores/complex.hpp"
#include "monores/errors.hpp"
#include "monores/io.hpp"
#include "monores/resolution.hpp"
#include "monores/version.hpp"

namespace monores {

namespace {

// Integral homology budget for re-checking a candidate before it is logged.
constexpr std::size_t kReverifyIntegralFaces = std::size_t{1} << 16;

nlohmann::json caps_json(const Limits& l)
{
    return {{"generators", l.max_generators}, {"faces", l.max_faces},   {"lattice", l.max_lattice},
            {"cliques", l.max_cliques},       {"chains", l.max_chains}, {"integral_faces", l.max_integral_faces}};
}

Limits caps_from_json(const nlohmann::json& j)
{
    Limits l;
    l.max_generators = j.at("generators").get<std::size_t>();
    l.max_faces = j.at("faces").get<std::size_t>();
    l.max_lattice = j.at("lattice").get<std::size_t>();
    l.max_cliques = j.at("cliques").get<std::size_t>();
    l.max_chains = j.at("chains").get<std::size_t>();
    l.max_integral_faces = j.at("integral_faces").get<std::size_t>();
    return l;
}

std::vector<FieldSpec> to_fields(const std::vector<std::uint32_t>& ps)
{
    std::vector<FieldSpec> out;
    for (auto p : ps)
        out.emplace_back(p);
    return out;
}

}  // namespace

IdealRandomSpec trial_spec(IdealRandomSpec base, std::uint64_t trial)
{
    base.seed = mix_seed(base.seed, trial);
    return base;
}

FuzzRecord run_conjecture_trial(const IdealRandomSpec& spec, std::uint64_t trial,
                                const std::vector<FieldSpec>& fields, const Limits& limits)
{
    FuzzRecord rec;
    rec.trial = trial;
    rec.spec = spec;
    rec.caps = limits;
    for (const auto& f : fields)
        rec.fields.push_back(f.characteristic());
    rec.version = kToolVersion;

    MonomialIdeal ideal;
    try {
        ideal = random_ideal(spec);
    } catch (const DomainError& e) {
        rec.verdict = kVerdictSkipped;
        rec.checks["generation"] = std::string("skipped: ") + e.what();
        return rec;
    }
    rec.ideal = ideal_to_json(ideal);

    const auto graph = buchberger_graph(ideal);
    rec.graph = {{"planar", is_planar(graph)}, {"connected", is_connected(graph)}};

    VerificationReport report;
    try {
        report = conjecture_evidence(ideal, fields, limits);
    } catch (const CapExceeded& e) {
        report.skip("conjecture", e.what());
        report.set_fact("verdict", kVerdictSkipped);
    }
    rec.verdict = report.facts().value("verdict", std::string(kVerdictSkipped));
    for (const auto& c : report.checks())
        rec.checks[c.name] = to_string(c.status);

    if (rec.verdict == kVerdictCandidate) {
        rec.witness = report.facts().value("witness", nlohmann::json());
        Limits wider = limits;
        wider.max_integral_faces = std::max(limits.max_integral_faces, kReverifyIntegralFaces);
        try {
            rec.reverified = conjecture_evidence(ideal, fields, wider).facts().value("verdict", std::string());
        } catch (const CapExceeded&) {
            rec.reverified = kVerdictSkipped;
        }
    }
    return rec;
}

nlohmann::json replay_key(const FuzzRecord& r)
{
    nlohmann::json j = {
        {"trial", r.trial},
        {"seed", r.spec.seed},
        {"spec",
         {{"n", r.spec.n}, {"r", r.spec.r}, {"max_degree", r.spec.max_degree}, {"mode", to_string(r.spec.mode)}}},
        {"fields", r.fields},
        {"caps", caps_json(r.caps)},
        {"ideal", r.ideal},
        {"verdict", r.verdict},
        {"checks", r.checks},
        {"graph", r.graph},
    };
    if (!r.witness.is_null())
        j["witness"] = r.witness;
    if (!r.reverified.empty())
        j["reverified"] = r.reverified;
    return j;
}

nlohmann::json to_json(const FuzzRecord& r)
{
    auto j = replay_key(r);
    j["timestamp"] = r.timestamp;
    j["tool"] = kToolName;
    j["version"] = r.version;
    return j;
}

FuzzRecord fuzz_record_from_json(const nlohmann::json& j)
{
    FuzzRecord r;
    r.trial = j.at("trial").get<std::uint64_t>();
    r.spec.seed = j.at("seed").get<std::uint64_t>();
    const auto& s = j.at("spec");
    r.spec.n = s.at("n").get<std::size_t>();
    r.spec.r = s.at("r").get<std::size_t>();
    r.spec.max_degree = s.at("max_degree").get<Exponent>();
    r.spec.mode = parse_ideal_mode(s.at("mode").get<std::string>());
    r.fields = j.at("fields").get<std::vector<std::uint32_t>>();
    r.caps = caps_from_json(j.at("caps"));
    r.ideal = j.value("ideal", nlohmann::json());
    r.verdict = j.at("verdict").get<std::string>();
    r.checks = j.value("checks", nlohmann::json::object());
    r.graph = j.value("graph", nlohmann::json::object());
    r.witness = j.value("witness", nlohmann::json());
    r.reverified = j.value("reverified", std::string());
    r.timestamp = j.value("timestamp", std::string());
    r.version = j.value("version", std::string());
    return r;
}

std::string replay_mismatch(const FuzzRecord& record)
{
    const auto again = run_conjecture_trial(record.spec, record.trial, to_fields(record.fields), record.caps);
    const auto expected = replay_key(record);
    const auto actual = replay_key(again);
    if (expected == actual)
        return {};
    const auto diff = nlohmann::json::diff(expected, actual);
    return "trial " + std::to_string(record.trial) + " differs on replay: " + diff.dump();
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace monores
