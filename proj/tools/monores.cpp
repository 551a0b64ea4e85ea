// monores: command-line front end for the monomial resolution toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "monores/complex.hpp"
#include "monores/errors.hpp"
#include "monores/fuzz.hpp"
#include "monores/io.hpp"
#include "monores/parallel.hpp"
#include "monores/random.hpp"
#include "monores/resolution.hpp"
#include "monores/version.hpp"

using namespace monores;

namespace {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kParseError = 2,
    kCapExceeded = 3,
    kMinimalityPrecondition = 4,
    kGenericityPrecondition = 5,
};

struct GenericityError : Error {
    using Error::Error;
};

struct RunConfig {
    std::string input;
    std::string inline_ideal;
    std::string format = "text";
    std::uint32_t field = 0;
    std::vector<std::uint32_t> fields{0, 2, 3, 32003};
    Limits limits;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::string log;

    // complex / betti
    std::string kind = "bu";
    std::string method = "interval";

    // random / conjecture
    std::size_t n = 3;
    std::size_t gens = 4;
    Exponent maxdeg = 4;
    std::string mode = "arbitrary";
    std::string replay;

    // ibar
    std::string u;
    std::string M;

    // verify test hook
    long drop_facet = -1;
};

MonomialIdeal load_ideal(const RunConfig& cfg)
{
    ParsedIdeal parsed;
    if (!cfg.inline_ideal.empty())
        parsed = parse_ideal(cfg.inline_ideal);
    else if (!cfg.input.empty() && cfg.input != "-")
        parsed = read_ideal_file(cfg.input);
    else {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        parsed = parse_ideal(buf.str());
    }
    for (const auto& w : parsed.warnings)
        std::cerr << "warning: " << w << '\n';
    return parsed.ideal;
}

std::vector<FieldSpec> fields_of(const std::vector<std::uint32_t>& ps)
{
    std::vector<FieldSpec> out;
    for (auto p : ps)
        out.emplace_back(p);
    return out;
}

std::string complex_text(const LabeledComplex& c)
{
    std::ostringstream os;
    const auto& complex = c.complex();
    os << "f-vector:";
    for (auto f : f_vector(complex))
        os << ' ' << f;
    os << "\nfacets:\n";
    for (const auto& facet : complex.facets()) {
        os << "  {";
        for (std::size_t k = 0; k < facet.size(); ++k)
            os << (k ? ", " : "") << format_monomial(c.ideal().generator(facet[k]));
        os << "}  label " << format_monomial(c.label(facet)) << '\n';
    }
    return os.str();
}

std::string graph_text(const SimpleGraph& g, const MonomialIdeal& ideal)
{
    std::ostringstream os;
    os << "vertices: " << g.num_vertices() << "\nedges: " << g.num_edges() << '\n';
    for (const auto& [a, b] : g.edges())
        os << "  " << format_monomial(ideal.generator(a)) << " -- " << format_monomial(ideal.generator(b)) << '\n';
    os << "planar: " << (is_planar(g) ? "yes" : "no") << "\nconnected: " << (is_connected(g) ? "yes" : "no")
       << '\n';
    return os.str();
}

void emit_report(const VerificationReport& report, const std::string& format)
{
    if (format == "json")
        std::cout << report.to_json().dump(2) << '\n';
    else
        std::cout << report.to_text();
}

Multidegree parse_vector(const std::string& text, const char* what)
{
    std::vector<Exponent> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            if (used != item.size() || v > kMaxExponent)
                throw std::invalid_argument(item);
            out.push_back(static_cast<Exponent>(v));
        } catch (const std::logic_error&) {
            throw ParseError(std::string("bad ") + what + " entry '" + item + "'", 1, 1);
        }
    }
    return Multidegree(std::move(out));
}

// ---------------------------------------------------------------------------
// Commands

int cmd_mingens(const RunConfig& cfg)
{
    const auto ideal = load_ideal(cfg);
    std::cout << (cfg.format == "json" ? format_ideal_json(ideal) + "\n" : format_ideal_text(ideal));
    return kOk;
}

int cmd_complex(const RunConfig& cfg)
{
    const auto ideal = load_ideal(cfg);
    if (cfg.kind == "graph") {
        const auto g = buchberger_graph(ideal);
        if (cfg.format == "dot")
            std::cout << to_dot(g, ideal);
        else if (cfg.format == "json") {
            nlohmann::json vertices = nlohmann::json::array();
            for (const auto& gen : ideal.generators())
                vertices.push_back(format_monomial(gen));
            std::cout << nlohmann::json{{"vertices", vertices},
                                        {"edges", g.edges()},
                                        {"planar", is_planar(g)},
                                        {"connected", is_connected(g)}}
                             .dump(2)
                      << '\n';
        } else
            std::cout << graph_text(g, ideal);
        return kOk;
    }

    LabeledComplex c = [&] {
        if (cfg.kind == "bu")
            return buchberger_complex(ideal, cfg.limits);
        if (cfg.kind == "scarf")
            return scarf_complex(ideal, cfg.limits);
        if (cfg.kind == "taylor")
            return taylor_complex(ideal, cfg.limits);
        return clique_complex(buchberger_graph(ideal), ideal, cfg.limits);
    }();
    if (cfg.format == "json")
        std::cout << to_json(c).dump(2) << '\n';
    else if (cfg.format == "dot")
        std::cout << to_dot(one_skeleton(c.complex(), ideal.size()), ideal);
    else
        std::cout << complex_text(c);
    return kOk;
}

int cmd_betti(const RunConfig& cfg)
{
    const auto ideal = load_ideal(cfg);
    const FieldSpec field(cfg.field);
    BettiTable table;
    if (cfg.method == "faces")
        table = betti_from_complex(buchberger_complex(ideal, cfg.limits), field, cfg.limits);
    else if (cfg.method == "agreement")
        table = betti_from_agreement(ideal, field, cfg.limits);
    else
        table = betti_from_intervals(ideal, field, cfg.limits);
    std::cout << (cfg.format == "json" ? table.to_json().dump(2) + "\n" : table.to_text());
    return kOk;
}

int cmd_verify(const RunConfig& cfg)
{
    const auto ideal = load_ideal(cfg);
    VerificationReport report;
    auto bu = buchberger_complex(ideal, cfg.limits);
    if (cfg.drop_facet >= 0) {
        // Test hook: replace one facet of Bu(I) by its boundary.
        auto facets = bu.complex().facets();
        const auto which = static_cast<std::size_t>(cfg.drop_facet);
        if (which >= facets.size())
            throw DomainError("--drop-facet index out of range");
        std::vector<Face> keep;
        for (std::size_t k = 0; k < facets.size(); ++k) {
            if (k != which) {
                keep.push_back(facets[k]);
                continue;
            }
            for (std::size_t drop = 0; facets[k].size() > 1 && drop < facets[k].size(); ++drop) {
                Face sub = facets[k];
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                keep.push_back(sub);
            }
        }
        bu = LabeledComplex(ideal, SimplicialComplex::from_facets(keep, cfg.limits.max_faces));
        report.set_fact("mutated", "dropped facet " + std::to_string(which));
    }

    report.set_fact("generators", ideal.size());
    report.set_fact("f_vector", f_vector(bu.complex()));
    for (const auto& field : fields_of(cfg.fields))
        report.merge(supports_resolution(bu, field, cfg.limits), "buchberger:");
    const auto square = check_differentials_square_zero(homogenized_resolution(bu));
    report.check("buchberger:differentials_square_zero", square.empty(), square);

    const bool minimal = buchberger_minimality(ideal, cfg.limits);
    report.set_fact("minimal", minimal);
    report.merge(verify_scarf_equivalence(ideal, cfg.limits), "scarf:");
    report.merge(lemma_battery(ideal, FieldSpec(cfg.fields.front()), cfg.limits), "lemma:");
    emit_report(report, cfg.format);
    return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_ibar(const RunConfig& cfg)
{
    const auto ideal = load_ideal(cfg);
    const std::size_t n = ideal.num_vars();
    const Multidegree u = cfg.u.empty() ? ideal.top() : parse_vector(cfg.u, "u");

    Multidegree extra(n + 1);
    extra[n] = 1;
    if (!cfg.M.empty()) {
        const auto parsed = parse_ideal_text(cfg.M).ideal;
        if (parsed.size() != 1)
            throw ParseError("--M must be a single monomial", 1, 1);
        const auto& m = parsed.generator(0);
        extra = Multidegree(std::max(m.size(), n + 1));
        for (std::size_t i = 0; i < m.size(); ++i)
            extra[i] = m[i];
    }
    if (!is_generic(ideal)) {
        const auto report = verify_ibar(ideal, u, extra, FieldSpec(cfg.field), cfg.limits);
        emit_report(report, cfg.format);
        throw GenericityError("input ideal is not generic");
    }
    const auto report = verify_ibar(ideal, u, extra, FieldSpec(cfg.field), cfg.limits);
    emit_report(report, cfg.format);
    return report.all_passed() ? kOk : kCheckFailed;
}

IdealRandomSpec random_spec(const RunConfig& cfg)
{
    IdealRandomSpec spec{cfg.n, cfg.gens, cfg.maxdeg, parse_ideal_mode(cfg.mode), cfg.seed};
    spec.validate();
    return spec;
}

int cmd_random(const RunConfig& cfg)
{
    const auto ideal = random_ideal(random_spec(cfg));
    std::cout << (cfg.format == "json" ? format_ideal_json(ideal) + "\n" : format_ideal_text(ideal));
    return kOk;
}

int cmd_replay(const RunConfig& cfg)
{
    std::ifstream in(cfg.replay);
    if (!in)
        throw Error("cannot open '" + cfg.replay + "'");
    std::string line;
    std::size_t count = 0, mismatches = 0, line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what(), line_no, 1);
        }
        const auto mismatch = replay_mismatch(fuzz_record_from_json(j));
        ++count;
        if (!mismatch.empty()) {
            ++mismatches;
            std::cout << mismatch << '\n';
        }
    }
    std::cout << "replayed: " << count << "\nmismatches: " << mismatches << '\n';
    return mismatches == 0 ? kOk : kCheckFailed;
}

int cmd_conjecture(const RunConfig& cfg)
{
    if (!cfg.replay.empty())
        return cmd_replay(cfg);
    const auto base = random_spec(cfg);
    const auto fields = fields_of(cfg.fields);
    auto records = parallel_map(cfg.trials, [&](std::size_t k) {
        return run_conjecture_trial(trial_spec(base, k), k, fields, cfg.limits);
    });

    std::size_t consistent = 0, candidates = 0, skipped = 0;
    std::ofstream log;
    if (!cfg.log.empty()) {
        log.open(cfg.log, std::ios::app);
        if (!log)
            throw Error("cannot open log '" + cfg.log + "' for appending");
    }
    nlohmann::json trials = nlohmann::json::array();
    for (auto& rec : records) {
        rec.timestamp = utc_timestamp();
        if (rec.verdict == kVerdictConsistent)
            ++consistent;
        else if (rec.verdict == kVerdictCandidate)
            ++candidates;
        else
            ++skipped;
        if (log.is_open()) {
            log << to_json(rec).dump() << '\n';
            log.flush();
            if (!log)
                throw Error("write to log '" + cfg.log + "' failed");
        }
        if (cfg.format == "json")
            trials.push_back(replay_key(rec));
    }

    if (cfg.format == "json") {
        std::cout << nlohmann::json{{"trials", trials},
                                    {"summary",
                                     {{"consistent", consistent},
                                      {"candidates", candidates},
                                      {"skipped", skipped}}}}
                         .dump(2)
                  << '\n';
    } else {
        for (const auto& rec : records)
            if (rec.verdict == kVerdictCandidate)
                std::cout << "candidate at trial " << rec.trial << " (seed " << rec.spec.seed
                          << "): " << rec.witness.dump() << '\n';
        std::cout << "trials: " << records.size() << "\nconsistent: " << consistent
                  << "\ncandidate counterexamples: " << candidates << "\nskipped: " << skipped << '\n';
    }
    return candidates == 0 ? kOk : kCheckFailed;
}

void add_input(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("input,-i,--input", cfg.input, "Ideal file (text or JSON); '-' or omitted reads stdin");
    sub->add_option("--ideal", cfg.inline_ideal, "Inline ideal, e.g. \"x1^2, x2^2, x1*x2\"");
}

void add_caps(CLI::App* sub, RunConfig& cfg)
{
    auto positive = CLI::PositiveNumber;
    sub->add_option("--cap-faces", cfg.limits.max_faces, "Face enumeration cap")->check(positive);
    sub->add_option("--cap-lattice", cfg.limits.max_lattice, "lcm-lattice size cap")->check(positive);
    sub->add_option("--cap-cliques", cfg.limits.max_cliques, "Clique enumeration cap")->check(positive);
    sub->add_option("--cap-generators", cfg.limits.max_generators, "Generator count cap")->check(positive);
    sub->add_option("--cap-integral", cfg.limits.max_integral_faces, "Face cap for integral homology")
        ->check(positive);
}

void add_format(CLI::App* sub, RunConfig& cfg, std::vector<std::string> allowed)
{
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

void add_random_spec(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--n", cfg.n, "Number of variables")->check(CLI::PositiveNumber);
    sub->add_option("--gens", cfg.gens, "Target generator count")->check(CLI::PositiveNumber);
    sub->add_option("--maxdeg", cfg.maxdeg, "Per-variable exponent bound")->check(CLI::PositiveNumber);
    sub->add_option("--mode", cfg.mode, "arbitrary or strongly-generic")
        ->check(CLI::IsMember({"arbitrary", "strongly-generic"}));
    sub->add_option("--seed", cfg.seed, "Seed (default 0)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Buchberger and Scarf complexes, resolution checks and Betti numbers of monomial ideals"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);
    RunConfig cfg;

    auto* mingens = app.add_subcommand("mingens", "Print the minimal generators");
    add_input(mingens, cfg);
    add_format(mingens, cfg, {"text", "json"});

    auto* complex = app.add_subcommand("complex", "Build a complex or the Buchberger graph");
    add_input(complex, cfg);
    add_caps(complex, cfg);
    add_format(complex, cfg, {"text", "json", "dot"});
    complex->add_option("--kind", cfg.kind, "graph, bu, scarf, taylor or clique")
        ->check(CLI::IsMember({"graph", "bu", "scarf", "taylor", "clique"}));

    auto* betti = app.add_subcommand("betti", "Multigraded Betti numbers");
    add_input(betti, cfg);
    add_caps(betti, cfg);
    add_format(betti, cfg, {"text", "json"});
    betti->add_option("--method", cfg.method, "faces, interval or agreement")
        ->check(CLI::IsMember({"faces", "interval", "agreement"}));
    betti->add_option("--field", cfg.field, "0 for Q, or a prime");

    auto* verify = app.add_subcommand("verify", "Run the resolution and minimality checks");
    add_input(verify, cfg);
    add_caps(verify, cfg);
    add_format(verify, cfg, {"text", "json"});
    verify->add_option("--fields", cfg.fields, "Characteristics to test")->expected(1, -1);
    verify->add_option("--drop-facet", cfg.drop_facet, "Test hook: replace facet K of Bu(I) by its boundary");

    auto* conjecture = app.add_subcommand("conjecture", "Clique complex homology on random ideals");
    add_random_spec(conjecture, cfg);
    add_caps(conjecture, cfg);
    add_format(conjecture, cfg, {"text", "json"});
    conjecture->add_option("--trials", cfg.trials, "Number of random ideals");
    conjecture->add_option("--fields", cfg.fields, "Characteristics to test")->expected(1, -1);
    conjecture->add_option("--log", cfg.log, "Append one JSON record per trial to this file");
    conjecture->add_option("--replay", cfg.replay, "Replay a log file and compare every verdict");

    auto* ibar = app.add_subcommand("ibar", "Check the extension I + m^(u+1) M");
    add_input(ibar, cfg);
    add_caps(ibar, cfg);
    add_format(ibar, cfg, {"text", "json"});
    ibar->add_option("--u", cfg.u, "Comma-separated exponents (default: lcm of the generators)");
    ibar->add_option("--M", cfg.M, "Monomial in new variables (default: x_{n+1})");
    ibar->add_option("--field", cfg.field, "0 for Q, or a prime");

    auto* random = app.add_subcommand("random", "Emit a random ideal");
    add_random_spec(random, cfg);
    add_format(random, cfg, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        for (auto p : cfg.fields)
            FieldSpec{p};
        FieldSpec{cfg.field};
        if (cfg.fields.empty())
            throw DomainError("field list must be nonempty");

        if (mingens->parsed())
            return cmd_mingens(cfg);
        if (complex->parsed())
            return cmd_complex(cfg);
        if (betti->parsed())
            return cmd_betti(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (conjecture->parsed())
            return cmd_conjecture(cfg);
        if (ibar->parsed())
            return cmd_ibar(cfg);
        if (random->parsed())
            return cmd_random(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const DomainError& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kParseError;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const GenericityError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kGenericityPrecondition;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kMinimalityPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kCheckFailed;
}
