#include "monores/poset.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace monores {

struct FinitePoset::Memo {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, bool> answers;
};

FinitePoset::FinitePoset(std::vector<PosetElement> elements, Comparator leq)
    : elements_(std::move(elements)), cmp_(std::move(leq))
{
    const std::size_t n = elements_.size();
    if (n <= kDensePosetLimit) {
        up_.assign(n, boost::dynamic_bitset<>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                up_[a][b] = a == b || cmp_(a, b);
    } else {
        memo_ = std::make_shared<Memo>();
    }

    if (n <= kVerifiedPosetLimit) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!cmp_(a, a))
                throw DomainError("poset relation is not reflexive");
            for (std::size_t b = a + 1; b < n; ++b)
                if (up_[a][b] && up_[b][a])
                    throw DomainError("poset relation is not antisymmetric");
            for (std::size_t b = 0; b < n; ++b)
                if (up_[a][b] && !up_[b].is_subset_of(up_[a]))
                    throw DomainError("poset relation is not transitive");
        }
    }
}

bool FinitePoset::leq(std::size_t a, std::size_t b) const
{
    if (!up_.empty() || elements_.empty())
        return up_[a][b];
    if (a == b)
        return true;
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    std::lock_guard lock(memo_->mutex);
    auto [it, inserted] = memo_->answers.try_emplace(key, false);
    if (inserted)
        it->second = cmp_(a, b);
    return it->second;
}

std::vector<std::size_t> FinitePoset::linear_extension() const
{
    const std::size_t n = size();
    std::vector<std::size_t> below(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (leq(b, a))
                ++below[a];
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    return order;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_relations() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!less(a, b))
                continue;
            bool covered = true;
            for (std::size_t c = 0; c < n && covered; ++c)
                if (less(a, c) && less(c, b))
                    covered = false;
            if (covered)
                out.emplace_back(a, b);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// lcm-lattice

namespace {

bool degree_lex_less(const Multidegree& a, const Multidegree& b)
{
    auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
}

FinitePoset divisibility_poset(std::vector<Multidegree> elements)
{
    std::vector<PosetElement> payload(elements.begin(), elements.end());
    auto shared = std::make_shared<std::vector<Multidegree>>(std::move(elements));
    return FinitePoset(std::move(payload),
                       [shared](std::size_t a, std::size_t b) { return divides((*shared)[a], (*shared)[b]); });
}

IndexSet agreement_set(const Multidegree& sub, const Multidegree& m)
{
    IndexSet out;
    for (std::uint32_t i = 0; i < m.size(); ++i)
        if (sub[i] == m[i])
            out.push_back(i);
    return out;
}

}  // namespace

LcmLattice::LcmLattice(MonomialIdeal ideal, std::vector<Multidegree> elements)
    : ideal_(std::move(ideal)), elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end(), degree_lex_less);
    sorted_index_.resize(elements_.size());
    std::iota(sorted_index_.begin(), sorted_index_.end(), std::size_t{0});
    std::sort(sorted_index_.begin(), sorted_index_.end(),
              [&](std::size_t a, std::size_t b) { return elements_[a] < elements_[b]; });
}

std::optional<std::size_t> LcmLattice::index_of(const Multidegree& m) const
{
    auto it = std::lower_bound(sorted_index_.begin(), sorted_index_.end(), m,
                               [&](std::size_t idx, const Multidegree& key) { return elements_[idx] < key; });
    if (it == sorted_index_.end() || elements_[*it] != m)
        return std::nullopt;
    return *it;
}

FinitePoset LcmLattice::as_poset() const
{
    return divisibility_poset(elements_);
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal, const Limits& limits)
{
    const std::size_t n = ideal.num_vars();
    std::unordered_set<Multidegree, MultidegreeHash> seen;
    std::vector<Multidegree> worklist;
    auto add = [&](Multidegree m) {
        if (seen.insert(m).second) {
            if (seen.size() > limits.max_lattice)
                throw CapExceeded("lcm-lattice size", limits.max_lattice);
            worklist.push_back(std::move(m));
        }
    };
    add(Multidegree(n));
    // Every subset lcm is a chain of joins with single generators.
    while (!worklist.empty()) {
        Multidegree m = std::move(worklist.back());
        worklist.pop_back();
        for (const auto& g : ideal.generators())
            add(lcm(m, g));
    }
    return LcmLattice(ideal, std::vector<Multidegree>(seen.begin(), seen.end()));
}

namespace {

void require_member(const LcmLattice& lattice, const Multidegree& m, const char* what)
{
    if (m.size() != lattice.ideal().num_vars())
        throw LengthMismatch(std::string(what) + ": degree length does not match ideal");
    if (!lattice.contains(m))
        throw DomainError(std::string(what) + ": " + format_monomial(m) + " is not in the lcm-lattice");
}

}  // namespace

FinitePoset open_interval(const LcmLattice& lattice, const Multidegree& m)
{
    require_member(lattice, m, "open_interval");
    std::vector<Multidegree> inside;
    for (const auto& e : lattice.elements())
        if (!e.is_one() && e != m && divides(e, m))
            inside.push_back(e);
    return divisibility_poset(std::move(inside));
}

bool is_buchberger_degree(const LcmLattice& lattice, const Multidegree& m)
{
    require_member(lattice, m, "is_buchberger_degree");
    for (const auto& g : lattice.ideal().generators())
        if (properly_divides(g, m))
            return false;
    return true;
}

bool is_buchberger_degree(const MonomialIdeal& ideal, const Multidegree& m, const Limits& limits)
{
    return is_buchberger_degree(lcm_lattice(ideal, limits), m);
}

FinitePoset buchberger_degree_poset(const LcmLattice& lattice)
{
    std::vector<Multidegree> degrees;
    for (const auto& e : lattice.elements())
        if (!e.is_one() && is_buchberger_degree(lattice, e))
            degrees.push_back(e);
    return divisibility_poset(std::move(degrees));
}

FinitePoset buchberger_degree_poset(const MonomialIdeal& ideal, const Limits& limits)
{
    return buchberger_degree_poset(lcm_lattice(ideal, limits));
}

FinitePoset agreement_poset(const LcmLattice& lattice, const Multidegree& m)
{
    require_member(lattice, m, "agreement_poset");
    std::vector<IndexSet> sets;
    for (const auto& e : lattice.elements())
        if (!e.is_one() && e != m && divides(e, m))
            sets.push_back(agreement_set(e, m));
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    std::vector<PosetElement> payload(sets.begin(), sets.end());
    auto shared = std::make_shared<std::vector<IndexSet>>(std::move(sets));
    return FinitePoset(std::move(payload), [shared](std::size_t a, std::size_t b) {
        const auto& x = (*shared)[a];
        const auto& y = (*shared)[b];
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    });
}

FinitePoset agreement_poset(const MonomialIdeal& ideal, const Multidegree& m, const Limits& limits)
{
    return agreement_poset(lcm_lattice(ideal, limits), m);
}

// ---------------------------------------------------------------------------
// Complexes from posets

SimplicialComplex order_complex(const FinitePoset& poset, std::size_t max_chains)
{
    const auto order = poset.linear_extension();
    std::vector<std::size_t> rank(poset.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        rank[order[k]] = k;

    // Chains kept as sequences in increasing order; the last entry is the top.
    std::vector<std::vector<std::vector<std::size_t>>> chains{{{}}};
    std::size_t total = 1;
    while (true) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& chain : chains.back()) {
            const std::size_t from = chain.empty() ? 0 : rank[chain.back()] + 1;
            for (std::size_t k = from; k < order.size(); ++k) {
                const std::size_t e = order[k];
                if (!chain.empty() && !poset.less(chain.back(), e))
                    continue;
                auto longer = chain;
                longer.push_back(e);
                next.push_back(std::move(longer));
                if (++total > max_chains)
                    throw CapExceeded("order complex: chain count", max_chains);
            }
        }
        if (next.empty())
            break;
        chains.push_back(std::move(next));
    }

    std::vector<std::vector<Face>> levels;
    for (const auto& level : chains) {
        std::vector<Face> faces;
        faces.reserve(level.size());
        for (const auto& chain : level) {
            Face f(chain.begin(), chain.end());
            std::sort(f.begin(), f.end());
            faces.push_back(std::move(f));
        }
        std::sort(faces.begin(), faces.end());
        levels.push_back(std::move(faces));
    }
    return SimplicialComplex::from_levels(std::move(levels));
}

SimplicialComplex crosscut_complex(const FinitePoset& poset, const std::vector<std::size_t>& antichain,
                                   Boundedness bounds, std::size_t max_faces)
{
    const std::size_t n = poset.size();
    const std::size_t k = antichain.size();
    for (std::size_t a = 0; a < k; ++a) {
        if (antichain[a] >= n)
            throw DomainError("crosscut: element index out of range");
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && poset.leq(antichain[a], antichain[b]))
                throw DomainError("crosscut: given elements do not form an antichain");
    }

    std::vector<boost::dynamic_bitset<>> above(k, boost::dynamic_bitset<>(n));
    std::vector<boost::dynamic_bitset<>> below(k, boost::dynamic_bitset<>(n));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t p = 0; p < n; ++p) {
            above[a][p] = poset.leq(antichain[a], p);
            below[a][p] = poset.leq(p, antichain[a]);
        }
    }

    struct Partial {
        Face face;
        boost::dynamic_bitset<> upper;
        boost::dynamic_bitset<> lower;
    };
    boost::dynamic_bitset<> everything(n);
    everything.set();
    std::vector<std::vector<Partial>> levels{{Partial{{}, everything, everything}}};
    std::size_t total = 1;
    while (true) {
        std::vector<Partial> next;
        for (const auto& p : levels.back()) {
            const Vertex start = p.face.empty() ? 0 : p.face.back() + 1;
            for (Vertex v = start; v < k; ++v) {
                auto upper = p.upper & above[v];
                if (upper.none())
                    continue;
                auto lower = p.lower & below[v];
                if (bounds == Boundedness::both && lower.none())
                    continue;
                Face f = p.face;
                f.push_back(v);
                next.push_back(Partial{std::move(f), std::move(upper), std::move(lower)});
                if (++total > max_faces)
                    throw CapExceeded("crosscut complex: face count", max_faces);
            }
        }
        if (next.empty())
            break;
        levels.push_back(std::move(next));
    }

    if (n == 0)
        return SimplicialComplex::empty_face_only();
    std::vector<std::vector<Face>> faces;
    for (auto& level : levels) {
        std::vector<Face> fs;
        for (auto& p : level)
            fs.push_back(std::move(p.face));
        faces.push_back(std::move(fs));
    }
    return SimplicialComplex::from_levels(std::move(faces));
}

nlohmann::json to_json(const FinitePoset& poset)
{
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& e : poset.elements()) {
        if (const auto* m = std::get_if<Multidegree>(&e)) {
            elements.push_back(format_monomial(*m));
        } else {
            nlohmann::json idx = nlohmann::json::array();
            for (auto i : std::get<IndexSet>(e))
                idx.push_back(i + 1);
            elements.push_back(std::move(idx));
        }
    }
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [a, b] : poset.cover_relations())
        covers.push_back({a, b});
    return {{"elements", elements}, {"cover_relations", covers}};
}

}  // namespace monores
