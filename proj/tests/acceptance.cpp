// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "monores/complex.hpp"
#include "monores/errors.hpp"
#include "monores/fuzz.hpp"
#include "monores/homology.hpp"
#include "monores/io.hpp"
#include "monores/parallel.hpp"
#include "monores/poset.hpp"
#include "monores/random.hpp"
#include "monores/resolution.hpp"
#include "oracles.hpp"

using namespace monores;
using Clock = std::chrono::steady_clock;

namespace {

// Corpus seeds. Changing these changes every instance.
constexpr std::uint64_t kSharedBase = 0xA11CE;
constexpr std::uint64_t kBettiBase = 0xBE771;
constexpr std::uint64_t kIbarBase = 0x1BA2;
constexpr std::uint64_t kStrongBase = 0x5796;
constexpr std::uint64_t kConjectureBase = 0xC011;
constexpr std::uint64_t kPropertyBase = 0x960;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Tally {
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what)
    {
        if (ok)
            return;
        if (failures++ == 0)
            first = what;
    }
    void absorb(const Outcome& o)
    {
        if (!o.ok)
            expect(false, o.detail);
    }
    std::string summary(std::size_t instances) const
    {
        std::ostringstream os;
        os << instances << " instances, " << failures << " failures";
        if (failures)
            os << "; first: " << first;
        return os.str();
    }
};

std::string show(const MonomialIdeal& ideal)
{
    return ideal_to_json(ideal).dump();
}

// Random spec from one seed. r and max_degree are drawn from the upper half of
// their ranges because minimalization discards many of the r raw vectors.
IdealRandomSpec drawn_spec(std::uint64_t base, std::uint64_t k, std::size_t n_lo, std::size_t n_hi,
                           std::size_t r_hi, Exponent d_hi)
{
    const auto seed = mix_seed(base, k);
    std::mt19937_64 rng(seed);
    IdealRandomSpec spec;
    spec.n = uniform_int(rng, n_lo, n_hi);
    spec.r = uniform_int(rng, (r_hi + 1) / 2, r_hi);
    spec.max_degree = static_cast<Exponent>(uniform_int(rng, std::min<Exponent>(2, d_hi), d_hi));
    spec.seed = seed;
    return spec;
}

std::string sizes(const std::vector<MonomialIdeal>& ideals)
{
    std::size_t total = 0, most = 0;
    for (const auto& i : ideals) {
        total += i.size();
        most = std::max(most, i.size());
    }
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "generators mean " << (ideals.empty() ? 0.0 : double(total) / double(ideals.size()))
       << " max " << most;
    return os.str();
}

Face by_monomials(const MonomialIdeal& ideal, std::initializer_list<Multidegree> ms)
{
    Face f;
    for (const auto& m : ms)
        f.push_back(static_cast<Vertex>(ideal.index_of(m)));
    std::sort(f.begin(), f.end());
    return f;
}

std::set<oracle::Set> face_set(const SimplicialComplex& c)
{
    std::set<oracle::Set> out;
    for (const auto& f : c.all_faces())
        out.insert(f);
    return out;
}

std::vector<oracle::Vec> gens_of(const MonomialIdeal& ideal)
{
    std::vector<oracle::Vec> out;
    for (const auto& g : ideal.generators())
        out.push_back(g.vec());
    return out;
}

// ---------------------------------------------------------------------------

Outcome criterion_1()
{
    const auto t0 = Clock::now();
    const Multidegree x1s{2, 0, 0, 0}, x2s{0, 2, 0, 0}, x3s{0, 0, 2, 0}, x1x3{1, 0, 1, 0}, x2x4{0, 1, 0, 1};
    const auto ideal = minimalize({x1s, x2s, x3s, x1x3, x2x4});
    const auto bu = buchberger_complex(ideal);
    std::vector<Face> expected{by_monomials(ideal, {x2s, x3s, x1x3, x2x4}), by_monomials(ideal, {x1s, x2s, x1x3, x2x4})};
    std::sort(expected.begin(), expected.end());
    auto facets = bu.complex().facets();
    std::sort(facets.begin(), facets.end());

    const auto res = homogenized_resolution(bu);
    Tally t;
    t.expect(facets == expected, "facets differ");
    t.expect(f_vector(bu.complex()) == std::vector<std::size_t>{5, 9, 7, 2}, "f-vector differs");
    t.expect(res.ranks() == std::vector<std::size_t>{5, 9, 7, 2}, "resolution ranks differ");
    t.expect(check_differentials_square_zero(res).empty(), "differentials do not square to zero");
    t.expect(supports_resolution(bu).all_passed(), "Bu does not support a resolution");
    t.expect(buchberger_minimality(ideal), "Bu not reported minimal");
    const double elapsed = seconds_since(t0);
    t.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    return {t.failures == 0, "ranks 5,9,7,2; " + std::to_string(elapsed) + " s" + (t.failures ? "; " + t.first : "")};
}

Outcome criterion_2()
{
    // variables x y z a b c
    const Multidegree xa{1, 0, 0, 1, 0, 0}, yb{0, 1, 0, 0, 1, 0}, zc{0, 0, 1, 0, 0, 1}, xyz{1, 1, 1, 0, 0, 0};
    const auto ideal = minimalize({xa, yb, zc, xyz});
    const auto bu = buchberger_complex(ideal);
    const auto sc = scarf_complex(ideal);
    std::vector<Face> expected{by_monomials(ideal, {xa, yb, xyz}), by_monomials(ideal, {xa, zc, xyz}),
                               by_monomials(ideal, {yb, zc, xyz})};
    std::sort(expected.begin(), expected.end());
    auto facets = sc.complex().facets();
    std::sort(facets.begin(), facets.end());

    Tally t;
    t.expect(bu.complex() == taylor_complex(ideal).complex(), "Bu is not the full simplex");
    t.expect(bu.complex().facets() == std::vector<Face>{{0, 1, 2, 3}}, "Bu facet list differs");
    t.expect(facets == expected, "Scarf facets differ");
    t.expect(supports_resolution(sc).all_passed(), "Sc does not support a resolution");
    t.expect(is_minimal_complex(sc), "Sc not minimal");
    t.expect(!buchberger_minimality(ideal), "Bu reported minimal");
    return {t.failures == 0, t.failures ? t.first : "Bu = Taylor, Sc has 3 facets and is a minimal resolution"};
}

// Criteria 3, 5, 6 share one corpus.
struct SharedCorpus {
    std::vector<MonomialIdeal> ideals;
    double build_seconds = 0;
};

SharedCorpus shared_corpus()
{
    SharedCorpus c;
    for (std::uint64_t k = 0; k < 500; ++k)
        c.ideals.push_back(random_ideal(drawn_spec(kSharedBase, k, 2, 5, 8, 6)));
    return c;
}

Outcome criterion_3(const SharedCorpus& corpus)
{
    const auto t0 = Clock::now();
    std::atomic<std::size_t> degrees{0};
    const auto results = parallel_map(corpus.ideals.size(), [&](std::size_t k) -> std::string {
        const auto& ideal = corpus.ideals[k];
        const auto bu = buchberger_complex(ideal);
        for (const FieldSpec field : {FieldSpec(0), FieldSpec(2)}) {
            const auto report = supports_resolution(bu, field);
            degrees += report.facts().value("degrees_checked", std::size_t{0});
            if (!report.all_passed())
                return "instance " + std::to_string(k) + " over " + field.name() + ": " + show(ideal);
        }
        return {};
    });
    Tally t;
    for (const auto& r : results)
        t.expect(r.empty(), r);
    const double elapsed = seconds_since(t0);
    t.expect(elapsed <= 600.0, "runtime above 10 min");
    return {t.failures == 0, t.summary(results.size()) + ", " + std::to_string(degrees.load()) +
                                 " lattice degrees checked, " + sizes(corpus.ideals) + ", " +
                                 std::to_string(elapsed) + " s"};
}

Outcome criterion_4()
{
    std::size_t minimal = 0;
    std::vector<MonomialIdeal> corpus;
    for (std::uint64_t k = 0; k < 200; ++k)
        corpus.push_back(random_ideal(drawn_spec(kBettiBase, k, 2, 4, 6, 5)));
    const auto results = parallel_map(corpus.size(), [&](std::size_t k) -> std::pair<std::string, bool> {
        const auto& ideal = corpus[k];
        const bool is_min = buchberger_minimality(ideal);
        for (const FieldSpec field : {FieldSpec(0), FieldSpec(2)}) {
            const auto a = betti_from_intervals(ideal, field);
            const auto b = betti_from_agreement(ideal, field);
            if (!(a == b))
                return {"interval/agreement mismatch over " + field.name() + ": " + show(ideal), is_min};
            if (is_min && !(betti_from_complex(buchberger_complex(ideal), field) == a))
                return {"face count mismatch over " + field.name() + ": " + show(ideal), is_min};
        }
        return {{}, is_min};
    });
    Tally t;
    for (const auto& [r, is_min] : results) {
        t.expect(r.empty(), r);
        minimal += is_min;
    }
    return {t.failures == 0, t.summary(results.size()) + ", " + std::to_string(minimal) + " with minimal Bu, " + sizes(corpus)};
}

Outcome criterion_5(const SharedCorpus& corpus)
{
    std::size_t minimal = 0;
    const auto results = parallel_map(corpus.ideals.size(), [&](std::size_t k) -> std::pair<std::string, bool> {
        const auto& ideal = corpus.ideals[k];
        const bool is_min = buchberger_minimality(ideal);
        const auto sc = scarf_complex(ideal);
        const bool equal = sc.complex() == buchberger_complex(ideal).complex();
        if (is_min != equal)
            return {"biconditional broken: " + show(ideal), is_min};
        if (is_min && !(supports_resolution(sc).all_passed() && is_minimal_complex(sc)))
            return {"Sc not a minimal resolution: " + show(ideal), is_min};
        return {{}, is_min};
    });
    Tally t;
    for (const auto& [r, is_min] : results) {
        t.expect(r.empty(), r);
        minimal += is_min;
    }
    return {t.failures == 0, t.summary(results.size()) + ", " + std::to_string(minimal) + " with minimal Bu"};
}

Outcome criterion_6(const SharedCorpus& corpus)
{
    const auto results = parallel_map(corpus.ideals.size(), [&](std::size_t k) -> std::string {
        const auto report = lemma_battery(corpus.ideals[k]);
        if (report.all_passed())
            return {};
        for (const auto& c : report.checks())
            if (c.status == CheckStatus::fail)
                return c.name + " on " + show(corpus.ideals[k]);
        return "failed";
    });
    Tally t;
    for (const auto& r : results)
        t.expect(r.empty(), r);
    return {t.failures == 0, t.summary(results.size())};
}

Outcome criterion_7()
{
    std::vector<MonomialIdeal> corpus;
    std::uint64_t draws = 0;
    while (corpus.size() < 100) {
        auto ideal = random_ideal(drawn_spec(kIbarBase, draws++, 3, 3, 5, 6));
        if (is_generic(ideal))
            corpus.push_back(std::move(ideal));
    }
    const auto results = parallel_map(corpus.size(), [&](std::size_t k) -> std::string {
        const auto& ideal = corpus[k];
        const auto bar = ibar_extend(ideal, ideal.top(), Multidegree{0, 0, 0, 1});
        if (!buchberger_minimality(bar))
            return "Bu not minimal for " + show(bar);
        if (!(scarf_complex(bar).complex() == buchberger_complex(bar).complex()))
            return "Sc differs from Bu for " + show(bar);
        return {};
    });
    Tally t;
    for (const auto& r : results)
        t.expect(r.empty(), r);
    return {t.failures == 0, t.summary(results.size()) + " (" + std::to_string(draws) + " draws), " + sizes(corpus)};
}

Outcome criterion_8()
{
    std::vector<MonomialIdeal> corpus;
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto seed = mix_seed(kStrongBase, k);
        std::mt19937_64 rng(seed);
        IdealRandomSpec spec;
        spec.n = 3;
        spec.r = uniform_int(rng, 1, 7);
        spec.max_degree = static_cast<Exponent>(spec.r + uniform_int(rng, 0, 4));
        spec.mode = IdealMode::strongly_generic;
        spec.seed = seed;
        corpus.push_back(random_ideal(spec));
    }
    const auto results = parallel_map(corpus.size(), [&](std::size_t k) -> std::string {
        const auto& ideal = corpus[k];
        if (!is_strongly_generic(ideal))
            return "sampler returned a non strongly generic ideal: " + show(ideal);
        if (!is_generic(ideal))
            return "not generic: " + show(ideal);
        const auto g = buchberger_graph(ideal);
        if (!is_planar(g))
            return "BuG not planar: " + show(ideal);
        if (!is_connected(g))
            return "BuG not connected: " + show(ideal);
        if (!buchberger_minimality(ideal))
            return "Bu not minimal: " + show(ideal);
        return {};
    });
    Tally t;
    for (const auto& r : results)
        t.expect(r.empty(), r);
    return {t.failures == 0, t.summary(results.size()) + ", " + sizes(corpus)};
}

Outcome criterion_9(const std::string& log_path)
{
    const auto fields = default_fields();
    const Limits limits;
    auto records = parallel_map(1000, [&](std::size_t k) {
        return run_conjecture_trial(drawn_spec(kConjectureBase, k, 2, 5, 9, 7), k, fields, limits);
    });
    std::ofstream log(log_path, std::ios::trunc);
    for (auto& rec : records) {
        rec.timestamp = utc_timestamp();
        log << to_json(rec).dump() << '\n';
    }
    log.close();

    // Replay from the serialized log, not from the in-memory records.
    std::vector<FuzzRecord> parsed;
    std::ifstream in(log_path);
    for (std::string line; std::getline(in, line);)
        parsed.push_back(fuzz_record_from_json(nlohmann::json::parse(line)));

    const auto mismatches = parallel_map(parsed.size(), [&](std::size_t k) { return replay_mismatch(parsed[k]); });
    Tally t;
    t.expect(parsed.size() == records.size(), "log has " + std::to_string(parsed.size()) + " records");
    for (const auto& m : mismatches)
        t.expect(m.empty(), m);

    std::size_t consistent = 0, candidates = 0, skipped = 0;
    std::vector<MonomialIdeal> ideals;
    for (const auto& r : records) {
        if (!r.ideal.is_null())
            ideals.push_back(parse_ideal_json(r.ideal.dump()).ideal);
        if (r.verdict == kVerdictConsistent)
            ++consistent;
        else if (r.verdict == kVerdictCandidate)
            ++candidates;
        else
            ++skipped;
    }
    std::ostringstream os;
    os << t.summary(records.size()) << " on replay; consistent " << consistent << ", candidate " << candidates
       << ", skipped " << skipped << "; " << sizes(ideals) << "; log " << log_path;
    return {t.failures == 0, os.str()};
}

// Structural properties on fixed seeds.
Outcome criterion_10()
{
    Tally t;
    std::size_t instances = 0;

    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto ideal = random_ideal(drawn_spec(kPropertyBase, k, 2, 5, 8, 5));
        const auto name = show(ideal);
        ++instances;
        const auto bu = buchberger_complex(ideal);
        const auto sc = scarf_complex(ideal);
        const auto cl = clique_complex(buchberger_graph(ideal), ideal);
        const auto ta = taylor_complex(ideal);

        t.expect(sc.complex().is_subcomplex_of(bu.complex()), "Sc not in Bu: " + name);
        t.expect(bu.complex().is_subcomplex_of(cl.complex()), "Bu not in clique complex: " + name);
        t.expect(cl.complex().is_subcomplex_of(ta.complex()), "clique complex not in Taylor: " + name);

        for (const auto* c : {&sc, &bu, &ta}) {
            // integer boundary maps
            const auto b = boundary_matrices(c->complex());
            for (std::size_t d = 0; d + 1 < b.size(); ++d)
                t.expect(composes_to_zero(b[d], b[d + 1]), "integer square zero: " + name);
            // symbolic homogenized differentials
            t.expect(check_differentials_square_zero(homogenized_resolution(*c)).empty(), "symbolic square zero: " + name);
            // downward closure and label monotonicity, checked directly
            for (const auto& face : c->complex().all_faces()) {
                if (face.empty())
                    continue;
                const auto label = c->label(face);
                for (std::size_t drop = 0; drop < face.size(); ++drop) {
                    Face sub = face;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                    t.expect(c->complex().contains(sub), "not downward closed: " + name);
                    t.expect(divides(c->label(sub), label), "label not monotone: " + name);
                }
            }
        }

        // Euler characteristic of Bu equals the alternating Betti sum
        const auto totals = betti_from_intervals(ideal).totals();
        long long alt_betti = 0, alt_faces = 0;
        for (std::size_t i = 0; i < totals.size(); ++i)
            alt_betti += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(totals[i]);
        const auto f = f_vector(bu.complex());
        for (std::size_t i = 0; i < f.size(); ++i)
            alt_faces += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
        t.expect(alt_betti == alt_faces, "Euler characteristic: " + name);

        // Buchberger degrees form a lower set of the lcm-lattice
        const auto lattice = lcm_lattice(ideal);
        for (const auto& m : lattice.elements()) {
            if (!is_buchberger_degree(lattice, m))
                continue;
            for (const auto& m2 : lattice.elements())
                if (divides(m2, m))
                    t.expect(is_buchberger_degree(lattice, m2), "Buchberger degrees not downward closed: " + name);
        }
    }

    // exhaustive subset oracles
    for (std::uint64_t k = 0; k < 150; ++k) {
        const auto bu_ideal = random_ideal(drawn_spec(kPropertyBase + 1, k, 2, 5, 12, 6));
        t.expect(face_set(buchberger_complex(bu_ideal).complex()) ==
                     oracle::buchberger_faces(gens_of(bu_ideal), bu_ideal.num_vars()),
                 "Bu differs from subset oracle: " + show(bu_ideal));
        const auto sc_ideal = random_ideal(drawn_spec(kPropertyBase + 2, k, 2, 5, 10, 6));
        t.expect(face_set(scarf_complex(sc_ideal).complex()) ==
                     oracle::scarf_faces(gens_of(sc_ideal), sc_ideal.num_vars()),
                 "Sc differs from subset oracle: " + show(sc_ideal));
        instances += 2;
    }
    return {t.failures == 0, t.summary(instances)};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::string log_path = argc > 1 ? argv[1] : "acceptance_conjecture.jsonl";
    bool all = true;
    auto report = [&](int id, const char* title, const std::function<Outcome()>& fn) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.ok;
        std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    };

    report(1, "five-generator golden example", criterion_1);
    report(2, "xa, yb, zc, xyz golden example", criterion_2);
    const auto corpus = shared_corpus();
    report(3, "Bu supports a resolution", [&] { return criterion_3(corpus); });
    report(4, "three Betti computations agree", criterion_4);
    report(5, "minimality iff Sc = Bu", [&] { return criterion_5(corpus); });
    report(6, "lemma battery", [&] { return criterion_6(corpus); });
    report(7, "extension by m^(u+1) M", criterion_7);
    report(8, "strongly generic pipeline", criterion_8);
    report(9, "clique complex campaign replays", [&] { return criterion_9(log_path); });
    report(10, "structural property suites", criterion_10);
    return all ? 0 : 1;
}
