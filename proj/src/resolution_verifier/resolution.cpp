#include "monores/resolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "monores/io.hpp"
#include "monores/parallel.hpp"
#include "monores/poset.hpp"

namespace monores {

// ---------------------------------------------------------------------------
// Homogenized complex

std::vector<std::size_t> FreeResolutionDescription::ranks() const
{
    std::vector<std::size_t> out;
    for (const auto& b : basis)
        out.push_back(b.size());
    return out;
}

namespace {

std::string signed_monomial(int sign, const Multidegree& m)
{
    std::string out = sign > 0 ? "+x^(" : "-x^(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(m[i]);
    }
    return out + ")";
}

Multidegree add_exponents(const Multidegree& a, const Multidegree& b)
{
    Multidegree out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += b[i];
    return out;
}

}  // namespace

std::string FreeResolutionDescription::dump() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < differentials.size(); ++i) {
        const std::size_t rows = i == 0 ? 1 : basis[i - 1].size();
        os << "d" << i << ": " << rows << " x " << basis[i].size() << '\n';
        for (const auto& e : differentials[i])
            os << e.row << ' ' << e.col << ' ' << signed_monomial(e.sign, e.monomial) << '\n';
    }
    return os.str();
}

FreeResolutionDescription homogenized_resolution(const LabeledComplex& c)
{
    FreeResolutionDescription res;
    res.ideal = c.ideal();
    const auto& complex = c.complex();
    for (int d = 0; d <= complex.dimension(); ++d) {
        std::vector<std::pair<Face, Multidegree>> level;
        const auto& faces = complex.faces(d);
        for (std::size_t idx = 0; idx < faces.size(); ++idx)
            level.emplace_back(faces[idx], c.label(d, idx));
        res.basis.push_back(std::move(level));
    }
    const auto boundaries = boundary_matrices(complex);
    for (std::size_t d = 0; d < boundaries.size(); ++d) {
        std::vector<DifferentialEntry> entries;
        const auto& m = boundaries[d].matrix;
        const int dim = static_cast<int>(d);
        for (std::uint32_t col = 0; col < m.cols; ++col) {
            const Multidegree& top = c.label(dim, col);
            for (const auto& e : m.columns[col]) {
                // Augmentation: vertex v maps to its generator, i.e. x^{label(v) - label(∅)}.
                const Multidegree& bottom = c.label(dim - 1, e.row);
                entries.push_back({e.row, col, static_cast<int>(e.value), quotient(top, bottom)});
            }
        }
        res.differentials.push_back(std::move(entries));
    }
    return res;
}

std::string check_differentials_square_zero(const FreeResolutionDescription& res)
{
    for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i) {
        const auto& lower = res.differentials[i];
        const auto& upper = res.differentials[i + 1];
        std::vector<std::vector<const DifferentialEntry*>> lower_by_col(res.basis[i].size());
        for (const auto& e : lower) {
            if (e.sign != 1 && e.sign != -1)
                return "entry with sign other than ±1 in d" + std::to_string(i);
            lower_by_col[e.col].push_back(&e);
        }
        std::map<std::uint32_t, std::map<std::pair<std::uint32_t, Multidegree>, int>> acc;
        for (const auto& up : upper)
            for (const DifferentialEntry* low : lower_by_col[up.row])
                acc[up.col][{low->row, add_exponents(up.monomial, low->monomial)}] += up.sign * low->sign;
        for (const auto& [col, terms] : acc)
            for (const auto& [key, coeff] : terms)
                if (coeff != 0)
                    return "d" + std::to_string(i) + "∘d" + std::to_string(i + 1) + " nonzero at (" +
                           std::to_string(key.first) + "," + std::to_string(col) + "): " +
                           signed_monomial(coeff > 0 ? 1 : -1, key.second);
    }
    return {};
}

// ---------------------------------------------------------------------------
// BettiTable

void BettiTable::add(int i, const Multidegree& m, std::size_t rank)
{
    if (rank == 0)
        return;
    entries_[{i, m}] += rank;
}

std::size_t BettiTable::at(int i, const Multidegree& m) const
{
    auto it = entries_.find({i, m});
    return it == entries_.end() ? 0 : it->second;
}

std::vector<std::size_t> BettiTable::totals() const
{
    std::vector<std::size_t> out;
    for (const auto& [key, rank] : entries_) {
        const auto i = static_cast<std::size_t>(key.first);
        if (out.size() <= i)
            out.resize(i + 1, 0);
        out[i] += rank;
    }
    return out;
}

nlohmann::json BettiTable::to_json() const
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, rank] : entries_)
        entries.push_back({{"i", key.first}, {"degree", monores::to_json(key.second)}, {"rank", rank}});
    return {{"entries", entries}, {"totals", totals()}};
}

std::string BettiTable::to_text() const
{
    std::ostringstream os;
    const auto t = totals();
    os << "totals:";
    for (auto v : t)
        os << ' ' << v;
    os << '\n';
    for (const auto& [key, rank] : entries_)
        os << "beta_" << key.first << ',' << format_monomial(key.second) << " = " << rank << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// VerificationReport

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "?";
}

void VerificationReport::pass(const std::string& name, const std::string& detail)
{
    checks_.push_back({name, CheckStatus::pass, detail, {}});
}

void VerificationReport::fail(const std::string& name, const std::string& detail, nlohmann::json witness)
{
    checks_.push_back({name, CheckStatus::fail, detail, std::move(witness)});
}

void VerificationReport::skip(const std::string& name, const std::string& reason)
{
    checks_.push_back({name, CheckStatus::skipped, reason, {}});
}

void VerificationReport::check(const std::string& name, bool ok, const std::string& detail_on_fail,
                               nlohmann::json witness)
{
    if (ok)
        pass(name);
    else
        fail(name, detail_on_fail, std::move(witness));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix)
{
    for (auto c : other.checks_) {
        c.name = prefix + c.name;
        checks_.push_back(std::move(c));
    }
    for (const auto& [k, v] : other.facts_.items())
        facts_[prefix + k] = v;
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks_)
        if (c.name == name)
            return &c;
    return nullptr;
}

bool VerificationReport::all_passed() const
{
    return std::none_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

bool VerificationReport::status_is(const std::string& name, CheckStatus s) const
{
    const CheckResult* c = find(name);
    return c != nullptr && c->status == s;
}

nlohmann::json VerificationReport::to_json() const
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : checks_) {
        nlohmann::json j = {{"name", c.name}, {"status", to_string(c.status)}};
        if (!c.detail.empty())
            j["detail"] = c.detail;
        if (!c.witness.is_null())
            j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    return {{"checks", checks}, {"facts", facts_}, {"all_passed", all_passed()}};
}

std::string VerificationReport::to_text() const
{
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << '[' << to_string(c.status) << "] " << c.name;
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << '\n';
        if (!c.witness.is_null())
            os << "    witness: " << c.witness.dump() << '\n';
    }
    for (const auto& [k, v] : facts_.items())
        os << k << " = " << v.dump() << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Criteria

namespace {

SimplicialComplex dividing_faces(const LabeledComplex& c, const Multidegree& m)
{
    const auto& complex = c.complex();
    std::vector<std::vector<Face>> levels;
    for (int d = -1; d <= complex.dimension(); ++d) {
        std::vector<Face> keep;
        const auto& faces = complex.faces(d);
        for (std::size_t idx = 0; idx < faces.size(); ++idx)
            if (divides(c.label(d, idx), m))
                keep.push_back(faces[idx]);
        if (keep.empty())
            break;
        levels.push_back(std::move(keep));
    }
    return SimplicialComplex::from_levels(std::move(levels));
}

nlohmann::json face_json(const Face& f)
{
    return nlohmann::json(f);
}

}  // namespace

VerificationReport supports_resolution(const LabeledComplex& c, FieldSpec field, const Limits& limits)
{
    VerificationReport report;
    const std::string name = "acyclic_over_" + field.name();
    const auto lattice = lcm_lattice(c.ideal(), limits);
    const auto& elements = lattice.elements();
    auto homology = parallel_map(elements.size(), [&](std::size_t k) -> HomologyRanks {
        if (elements[k].is_one())
            return {};
        const auto sub = dividing_faces(c, elements[k]);
        if (!sub.has_vertices())
            return {};
        return reduced_homology(sub, field);
    });
    for (std::size_t k = 0; k < elements.size(); ++k) {
        if (!homology[k].all_zero()) {
            report.fail(name, "Δ[m] is not acyclic at m = " + format_monomial(elements[k]),
                        {{"m", to_json(elements[k])}, {"reduced_homology", homology[k].reduced}});
            report.set_fact("degrees_checked", elements.size() - 1);
            return report;
        }
    }
    report.pass(name, std::to_string(elements.size() - 1) + " lattice degrees");
    report.set_fact("degrees_checked", elements.size() - 1);
    return report;
}

bool is_minimal_complex(const LabeledComplex& c)
{
    const auto& complex = c.complex();
    for (int d = 1; d <= complex.dimension(); ++d) {
        const auto& faces = complex.faces(d);
        for (std::size_t idx = 0; idx < faces.size(); ++idx) {
            for (std::size_t drop = 0; drop < faces[idx].size(); ++drop) {
                Face sub = faces[idx];
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                if (c.label(sub) == c.label(d, idx))
                    return false;
            }
        }
    }
    return true;
}

bool buchberger_minimality(const MonomialIdeal& ideal, const Limits& limits)
{
    // Sc ⊆ Bu always, so equal face counts mean equal complexes.
    return scarf_complex(ideal, limits).complex().num_faces() == buchberger_complex(ideal, limits).complex().num_faces();
}

BettiTable betti_from_complex(const LabeledComplex& c, FieldSpec field, const Limits& limits)
{
    if (!is_minimal_complex(c))
        throw PreconditionError("betti_from_complex: complex is not minimal");
    if (!supports_resolution(c, field, limits).all_passed())
        throw PreconditionError("betti_from_complex: complex does not support a resolution");
    BettiTable table;
    const auto& complex = c.complex();
    for (int d = 0; d <= complex.dimension(); ++d)
        for (std::size_t idx = 0; idx < complex.faces(d).size(); ++idx)
            table.add(d, c.label(d, idx), 1);
    return table;
}

namespace {

void add_shifted(BettiTable& table, const Multidegree& m, const HomologyRanks& h)
{
    // β_{i,m} = h̃_{i-1}
    for (std::size_t slot = 0; slot < h.reduced.size(); ++slot)
        table.add(static_cast<int>(slot), m, h.reduced[slot]);
}

}  // namespace

BettiTable betti_from_intervals(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits)
{
    const auto lattice = lcm_lattice(ideal, limits);
    const auto& elements = lattice.elements();
    auto homology = parallel_map(elements.size(), [&](std::size_t k) -> HomologyRanks {
        if (elements[k].is_one())
            return {};
        return reduced_homology(order_complex(open_interval(lattice, elements[k]), limits.max_chains), field);
    });
    BettiTable table;
    for (std::size_t k = 0; k < elements.size(); ++k)
        add_shifted(table, elements[k], homology[k]);
    return table;
}

BettiTable betti_from_agreement(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits)
{
    const auto lattice = lcm_lattice(ideal, limits);
    const auto& elements = lattice.elements();
    auto homology = parallel_map(elements.size(), [&](std::size_t k) -> HomologyRanks {
        if (elements[k].is_one() || !is_buchberger_degree(lattice, elements[k]))
            return {};
        return reduced_homology(order_complex(agreement_poset(lattice, elements[k]), limits.max_chains), field);
    });
    BettiTable table;
    for (std::size_t k = 0; k < elements.size(); ++k)
        add_shifted(table, elements[k], homology[k]);
    return table;
}

namespace {

bool has_proper_divisor(const MonomialIdeal& ideal, const Multidegree& m)
{
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Multidegree& g) { return properly_divides(g, m); });
}

struct SubsetScan {
    bool scanned = false;
    // Every label shared by two distinct subsets has a proper divisor.
    bool repeated_labels_properly_divided = true;
    nlohmann::json witness;
};

SubsetScan scan_all_subsets(const MonomialIdeal& ideal)
{
    SubsetScan scan;
    const std::size_t r = ideal.size();
    if (r > kSubsetScanLimit)
        return scan;
    scan.scanned = true;
    std::map<Multidegree, std::vector<std::uint32_t>> by_label;
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        Face f;
        for (Vertex v = 0; v < r; ++v)
            if (mask >> v & 1u)
                f.push_back(v);
        by_label[face_label(ideal, f)].push_back(mask);
    }
    for (const auto& [label, masks] : by_label) {
        if (masks.size() > 1 && !has_proper_divisor(ideal, label)) {
            scan.repeated_labels_properly_divided = false;
            scan.witness = {{"label", to_json(label)}, {"subset_masks", {masks[0], masks[1]}}};
            break;
        }
    }
    return scan;
}

}  // namespace

VerificationReport verify_scarf_equivalence(const MonomialIdeal& ideal, const Limits& limits)
{
    VerificationReport report;
    const auto bu = buchberger_complex(ideal, limits);
    const auto sc = scarf_complex(ideal, limits);
    const bool scarf_equals_bu = sc.complex() == bu.complex();
    const bool bu_minimal_complex = is_minimal_complex(bu);
    const bool bu_resolves = supports_resolution(bu, FieldSpec(), limits).all_passed();

    // Subset formulation of minimality; above the scan limit, fall back to
    // faces of Bu: any non-Scarf face of Bu lacks a proper divisor by definition.
    const SubsetScan scan = scan_all_subsets(ideal);
    bool subset_condition = scan.scanned ? scan.repeated_labels_properly_divided : scarf_equals_bu;

    report.set_fact("scarf_equals_buchberger", scarf_equals_bu);
    report.set_fact("buchberger_minimal", scarf_equals_bu);
    report.set_fact("buchberger_minimal_complex", bu_minimal_complex);
    report.set_fact("buchberger_resolves", bu_resolves);
    report.set_fact("subset_scan", scan.scanned ? "all subsets" : "Buchberger faces");
    report.set_fact("subset_condition", subset_condition);

    report.check("buchberger_resolves", bu_resolves, "Buchberger complex fails the acyclicity criterion");
    report.check("minimality_characterizations_agree",
                 scarf_equals_bu == subset_condition && scarf_equals_bu == (bu_minimal_complex && bu_resolves),
                 "Sc = Bu, the subset condition and minimality of the Buchberger resolution disagree",
                 {{"scarf_equals_buchberger", scarf_equals_bu},
                  {"subset_condition", subset_condition},
                  {"buchberger_minimal_complex", bu_minimal_complex},
                  {"subset_witness", scan.witness}});

    const bool sc_resolves = supports_resolution(sc, FieldSpec(), limits).all_passed();
    const bool sc_minimal = is_minimal_complex(sc);
    report.set_fact("scarf_resolves", sc_resolves);
    report.set_fact("scarf_minimal_complex", sc_minimal);
    if (scarf_equals_bu)
        report.check("scarf_minimal_resolution_when_buchberger_minimal", sc_resolves && sc_minimal,
                     "Buchberger resolution is minimal but the Scarf complex does not resolve minimally",
                     {{"scarf_resolves", sc_resolves}, {"scarf_minimal_complex", sc_minimal}});
    else
        report.skip("scarf_minimal_resolution_when_buchberger_minimal", "Buchberger resolution is not minimal");
    return report;
}

VerificationReport verify_ibar(const MonomialIdeal& ideal, const Multidegree& u, const Multidegree& extra,
                               FieldSpec field, const Limits& limits)
{
    VerificationReport report;
    const auto bar = ibar_extend(ideal, u, extra);
    report.set_fact("ibar", ideal_to_json(bar));
    if (!is_generic(ideal)) {
        report.skip("ibar_buchberger_minimal", "input ideal is not generic");
        report.skip("ibar_buchberger_resolves", "input ideal is not generic");
        report.skip("ibar_scarf_equals_buchberger", "input ideal is not generic");
        return report;
    }
    const auto bu = buchberger_complex(bar, limits);
    const auto sc = scarf_complex(bar, limits);
    const bool minimal = buchberger_minimality(bar, limits);
    report.check("ibar_buchberger_minimal", minimal && is_minimal_complex(bu),
                 "Buchberger resolution of the extended ideal is not minimal", ideal_to_json(bar));
    report.merge(supports_resolution(bu, field, limits), "ibar_buchberger_resolves:");
    report.check("ibar_scarf_equals_buchberger", sc.complex() == bu.complex(),
                 "Scarf and Buchberger complexes of the extended ideal differ", ideal_to_json(bar));
    return report;
}

VerificationReport conjecture_evidence(const MonomialIdeal& ideal, const std::vector<FieldSpec>& fields,
                                       const Limits& limits)
{
    VerificationReport report;
    const auto graph = buchberger_graph(ideal);
    std::optional<LabeledComplex> clique;
    try {
        clique.emplace(clique_complex(graph, ideal, limits));
    } catch (const CapExceeded& e) {
        report.skip("clique_complex", e.what());
        report.set_fact("verdict", kVerdictSkipped);
        return report;
    }
    const auto& complex = clique->complex();
    report.set_fact("f_vector", f_vector(complex));

    bool consistent = true;
    nlohmann::json homology = nlohmann::json::object();
    for (FieldSpec field : fields) {
        const auto h = reduced_homology(complex, field);
        homology[field.name()] = h.reduced;
        const bool zero = !complex.has_vertices() || h.all_zero();
        consistent = consistent && zero;
        report.check("clique_acyclic_over_" + field.name(), zero, "nonvanishing reduced homology " + h.to_string(),
                     {{"reduced_homology", h.reduced}});
    }
    report.set_fact("homology", homology);

    if (complex.num_faces() <= limits.max_integral_faces) {
        const auto z = integral_homology(complex, limits);
        nlohmann::json torsion = nlohmann::json::array();
        for (const auto& t : z.torsion) {
            nlohmann::json level = nlohmann::json::array();
            for (const auto& d : t)
                level.push_back(d.str());
            torsion.push_back(std::move(level));
        }
        report.set_fact("integral_free_ranks", z.free_ranks);
        report.set_fact("integral_torsion", torsion);
        const bool zero = !complex.has_vertices() || z.all_zero();
        consistent = consistent && zero;
        report.check("clique_integral_homology_trivial", zero, "nontrivial integral homology",
                     {{"free_ranks", z.free_ranks}, {"torsion", torsion}});
    } else {
        report.skip("clique_integral_homology_trivial", "complex above integral homology cap");
    }

    if (consistent) {
        report.set_fact("verdict", kVerdictConsistent);
    } else {
        report.set_fact("verdict", kVerdictCandidate);
        nlohmann::json facets = nlohmann::json::array();
        for (const auto& f : complex.facets())
            facets.push_back(face_json(f));
        report.set_fact("witness", {{"ideal", ideal_to_json(ideal)}, {"clique_facets", facets}});
    }
    return report;
}

VerificationReport lemma_battery(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits)
{
    VerificationReport report;
    const auto lattice = lcm_lattice(ideal, limits);
    const auto& elements = lattice.elements();

    // Intervals below a properly divided degree are acyclic.
    auto interval_ok = parallel_map(elements.size(), [&](std::size_t k) -> std::optional<HomologyRanks> {
        const auto& m = elements[k];
        if (m.is_one() || !has_proper_divisor(ideal, m))
            return std::nullopt;
        auto h = reduced_homology(order_complex(open_interval(lattice, m), limits.max_chains), field);
        if (h.all_zero())
            return std::nullopt;
        return h;
    });
    std::size_t tested = 0;
    bool intervals_pass = true;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        if (!elements[k].is_one() && has_proper_divisor(ideal, elements[k]))
            ++tested;
        if (interval_ok[k] && intervals_pass) {
            intervals_pass = false;
            report.fail("properly_divided_intervals_acyclic",
                        "(1,m) has nonzero homology at m = " + format_monomial(elements[k]),
                        {{"m", to_json(elements[k])}, {"reduced_homology", interval_ok[k]->reduced}});
        }
    }
    if (intervals_pass)
        report.pass("properly_divided_intervals_acyclic", std::to_string(tested) + " intervals");

    const auto degrees = buchberger_degree_poset(lattice);
    if (ideal.empty()) {
        report.skip("buchberger_degree_poset_acyclic", "zero ideal");
        report.skip("crosscut_equals_buchberger_complex", "zero ideal");
        report.skip("buchberger_complex_acyclic", "zero ideal");
        return report;
    }

    // P_I is a lower order ideal of L_I minus {1}.
    bool lower_ideal = true;
    nlohmann::json lower_witness;
    for (std::size_t k = 0; k < degrees.size() && lower_ideal; ++k) {
        const auto& m = std::get<Multidegree>(degrees.element(k));
        for (const auto& e : elements) {
            if (!e.is_one() && divides(e, m) && has_proper_divisor(ideal, e)) {
                lower_ideal = false;
                lower_witness = {{"m", to_json(m)}, {"below", to_json(e)}};
                break;
            }
        }
    }
    report.check("buchberger_degrees_lower_ideal", lower_ideal, "P_I is not downward closed", lower_witness);

    const auto order = order_complex(degrees, limits.max_chains);
    const auto h_order = reduced_homology(order, field);
    report.check("buchberger_degree_poset_acyclic", h_order.all_zero(),
                 "order complex of P_I has homology " + h_order.to_string(), {{"reduced_homology", h_order.reduced}});

    std::vector<std::size_t> atoms;
    for (const auto& g : ideal.generators()) {
        for (std::size_t k = 0; k < degrees.size(); ++k) {
            if (std::get<Multidegree>(degrees.element(k)) == g) {
                atoms.push_back(k);
                break;
            }
        }
    }
    const auto bu = buchberger_complex(ideal, limits);
    const auto crosscut = crosscut_complex(degrees, atoms, Boundedness::upper_only, limits.max_faces);
    nlohmann::json cross_witness;
    if (!(crosscut == bu.complex())) {
        for (const auto& f : crosscut.all_faces())
            if (!bu.complex().contains(f)) {
                cross_witness = {{"only_in_crosscut", face_json(f)}};
                break;
            }
        for (const auto& f : bu.complex().all_faces())
            if (!crosscut.contains(f)) {
                cross_witness = {{"only_in_buchberger", face_json(f)}};
                break;
            }
    }
    report.check("crosscut_equals_buchberger_complex", crosscut == bu.complex(),
                 "crosscut complex of P_I differs from the Buchberger complex", cross_witness);

    const auto h_cross = reduced_homology(crosscut, field);
    report.check("crosscut_homology_matches_order_complex", h_cross == h_order,
                 "crosscut " + h_cross.to_string() + " vs order complex " + h_order.to_string());

    const auto h_bu = reduced_homology(bu.complex(), field);
    report.check("buchberger_complex_acyclic", h_bu.all_zero(), "Bu(I) has homology " + h_bu.to_string(),
                 {{"reduced_homology", h_bu.reduced}});
    return report;
}

}  // namespace monores
