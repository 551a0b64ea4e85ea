#include "monores/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "monores/io.hpp"

namespace monores {

namespace {

const std::vector<Face> kNoFaces;

bool strictly_increasing(const Face& f)
{
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i - 1] >= f[i])
            return false;
    return true;
}

void check_generator_cap(const MonomialIdeal& ideal, const Limits& limits, const char* what)
{
    if (ideal.size() > limits.max_generators)
        throw CapExceeded(std::string(what) + ": generator count " + std::to_string(ideal.size()), limits.max_generators);
}

// Breadth-first enumeration of a downward closed family on [0, r). A face
// G is reached from G minus its largest vertex, so `accept` only needs to
// judge the extension.
template <class Accept>
SimplicialComplex enumerate_closed(std::size_t r, std::size_t max_faces, const char* what, Accept accept)
{
    std::vector<std::vector<Face>> levels;
    levels.push_back({Face{}});
    std::size_t total = 1;
    while (true) {
        std::vector<Face> next;
        for (const Face& f : levels.back()) {
            Vertex start = f.empty() ? 0 : f.back() + 1;
            for (Vertex v = start; v < r; ++v) {
                if (!accept(f, v))
                    continue;
                Face g = f;
                g.push_back(v);
                next.push_back(std::move(g));
                if (++total > max_faces)
                    throw CapExceeded(std::string(what) + ": face count", max_faces);
            }
        }
        if (next.empty())
            break;
        levels.push_back(std::move(next));
    }
    // Extensions of lex-sorted faces by increasing v stay lex-sorted.
    return SimplicialComplex::from_levels(std::move(levels));
}

}  // namespace

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::empty_face_only()
{
    return from_levels({{Face{}}});
}

SimplicialComplex SimplicialComplex::from_levels(std::vector<std::vector<Face>> by_dim)
{
    SimplicialComplex c;
    while (!by_dim.empty() && by_dim.back().empty())
        by_dim.pop_back();
    c.by_dim_ = std::move(by_dim);
    return c;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces)
{
    std::vector<std::vector<Face>> levels;
    for (auto& f : faces) {
        if (!strictly_increasing(f))
            throw DomainError("face " + face_key(f) + " is not strictly increasing");
        if (levels.size() <= f.size())
            levels.resize(f.size() + 1);
        levels[f.size()].push_back(std::move(f));
    }
    for (auto& level : levels) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    SimplicialComplex c = from_levels(std::move(levels));
    if (c.is_void())
        return c;
    if (c.by_dim_[0].empty())
        throw DomainError("non-void complex must contain the empty face");
    for (std::size_t k = 1; k < c.by_dim_.size(); ++k) {
        if (c.by_dim_[k].empty())
            throw DomainError("complex is not downward closed: no faces of dimension " + std::to_string(k - 1));
        for (const Face& f : c.by_dim_[k]) {
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face sub = f;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!std::binary_search(c.by_dim_[k - 1].begin(), c.by_dim_[k - 1].end(), sub))
                    throw DomainError("complex is not downward closed: " + face_key(f) + " lacks " + face_key(sub));
            }
        }
    }
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets, std::size_t max_faces)
{
    std::set<Face> seen;
    for (const Face& facet : facets) {
        if (!strictly_increasing(facet))
            throw DomainError("facet " + face_key(facet) + " is not strictly increasing");
        if (facet.size() >= 63)
            throw CapExceeded("facet size", 62);
        const std::uint64_t subsets = std::uint64_t{1} << facet.size();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            Face f;
            for (std::size_t i = 0; i < facet.size(); ++i)
                if (mask >> i & 1u)
                    f.push_back(facet[i]);
            seen.insert(std::move(f));
            if (seen.size() > max_faces)
                throw CapExceeded("complex from facets: face count", max_faces);
        }
    }
    if (facets.empty())
        return {};
    return from_faces(std::vector<Face>(seen.begin(), seen.end()));
}

std::size_t SimplicialComplex::num_faces() const noexcept
{
    std::size_t total = 0;
    for (const auto& level : by_dim_)
        total += level.size();
    return total;
}

const std::vector<Face>& SimplicialComplex::faces(int d) const
{
    const auto slot = static_cast<std::size_t>(d + 1);
    if (d < -1 || slot >= by_dim_.size())
        return kNoFaces;
    return by_dim_[slot];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& f) const
{
    if (f.size() >= by_dim_.size())
        return std::nullopt;
    const auto& level = by_dim_[f.size()];
    auto it = std::lower_bound(level.begin(), level.end(), f);
    if (it == level.end() || *it != f)
        return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

std::vector<Vertex> SimplicialComplex::vertices() const
{
    std::vector<Vertex> out;
    for (const Face& f : faces(0))
        out.push_back(f[0]);
    return out;
}

std::vector<Face> SimplicialComplex::facets() const
{
    std::vector<Face> out;
    for (int d = -1; d <= dimension(); ++d) {
        const auto& up = faces(d + 1);
        for (const Face& f : faces(d)) {
            // f is a facet iff no face one dimension up contains it.
            bool covered = std::any_of(up.begin(), up.end(), [&](const Face& g) {
                return std::includes(g.begin(), g.end(), f.begin(), f.end());
            });
            if (!covered)
                out.push_back(f);
        }
    }
    return out;
}

std::vector<Face> SimplicialComplex::all_faces() const
{
    std::vector<Face> out;
    for (const auto& level : by_dim_)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const
{
    for (const auto& level : by_dim_)
        for (const Face& f : level)
            if (!other.contains(f))
                return false;
    return true;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& c)
{
    std::vector<std::size_t> out;
    for (int d = 0; d <= c.dimension(); ++d)
        out.push_back(c.faces(d).size());
    return out;
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k)
{
    if (k < -1)
        throw DomainError("skeleton dimension must be >= -1");
    std::vector<std::vector<Face>> levels;
    for (int d = -1; d <= std::min(k, c.dimension()); ++d)
        levels.push_back(c.faces(d));
    return SimplicialComplex::from_levels(std::move(levels));
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<Vertex>& perm)
{
    std::vector<Face> faces;
    for (Face f : c.all_faces()) {
        for (Vertex& v : f)
            v = perm.at(v);
        std::sort(f.begin(), f.end());
        faces.push_back(std::move(f));
    }
    if (c.is_void())
        return {};
    return SimplicialComplex::from_faces(std::move(faces));
}

// ---------------------------------------------------------------------------
// LabeledComplex

Multidegree face_label(const MonomialIdeal& ideal, const Face& f)
{
    Multidegree out(ideal.num_vars());
    for (Vertex v : f) {
        const Multidegree& g = ideal.generator(v);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::max(out[i], g[i]);
    }
    return out;
}

LabeledComplex::LabeledComplex(MonomialIdeal ideal, SimplicialComplex complex)
    : ideal_(std::move(ideal)), complex_(std::move(complex))
{
    for (Vertex v : complex_.vertices())
        if (v >= ideal_.size())
            throw DomainError("vertex " + std::to_string(v) + " has no generator");
    for (int d = -1; d <= complex_.dimension(); ++d) {
        std::vector<Multidegree> level;
        level.reserve(complex_.faces(d).size());
        for (const Face& f : complex_.faces(d))
            level.push_back(face_label(ideal_, f));
        labels_.push_back(std::move(level));
    }
}

Multidegree LabeledComplex::label(const Face& f) const
{
    if (auto idx = complex_.index_of(f))
        return labels_[f.size()][*idx];
    return face_label(ideal_, f);
}

// ---------------------------------------------------------------------------
// Graphs

void SimpleGraph::add_edge(Vertex a, Vertex b)
{
    if (a == b)
        throw DomainError("simple graphs have no loops");
    if (a >= adj_.size() || b >= adj_.size())
        throw DomainError("edge endpoint out of range");
    if (has_edge(a, b))
        return;
    adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
    const std::pair<Vertex, Vertex> e{std::min(a, b), std::max(a, b)};
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const
{
    if (a >= adj_.size() || b >= adj_.size())
        return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const
{
    return edges_;
}

SimpleGraph SimpleGraph::complete(std::size_t n)
{
    SimpleGraph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    return g;
}

namespace {

bool has_proper_divisor(const MonomialIdeal& ideal, const Multidegree& m)
{
    for (const auto& g : ideal.generators())
        if (properly_divides(g, m))
            return true;
    return false;
}

}  // namespace

SimpleGraph buchberger_graph(const MonomialIdeal& ideal)
{
    SimpleGraph g(ideal.size());
    for (Vertex a = 0; a < ideal.size(); ++a)
        for (Vertex b = a + 1; b < ideal.size(); ++b)
            if (!has_proper_divisor(ideal, lcm(ideal.generator(a), ideal.generator(b))))
                g.add_edge(a, b);
    return g;
}

LabeledComplex buchberger_complex(const MonomialIdeal& ideal, const Limits& limits)
{
    check_generator_cap(ideal, limits, "Buchberger complex");
    auto complex = enumerate_closed(ideal.size(), limits.max_faces, "Buchberger complex",
                                    [&](const Face& f, Vertex v) {
                                        Face g = f;
                                        g.push_back(v);
                                        return !has_proper_divisor(ideal, face_label(ideal, g));
                                    });
    return LabeledComplex(ideal, std::move(complex));
}

LabeledComplex scarf_complex(const MonomialIdeal& ideal, const Limits& limits)
{
    const LabeledComplex bu = buchberger_complex(ideal, limits);
    const auto& c = bu.complex();
    std::vector<std::vector<Face>> levels;
    for (int d = -1; d <= c.dimension(); ++d) {
        std::vector<Face> keep;
        const auto& faces = c.faces(d);
        for (std::size_t idx = 0; idx < faces.size(); ++idx) {
            const Face& f = faces[idx];
            const Multidegree& label = bu.label(d, idx);
            bool unique = true;
            // Adding a vertex outside f keeps the label iff that generator divides it.
            for (Vertex v = 0; v < ideal.size() && unique; ++v)
                if (!std::binary_search(f.begin(), f.end(), v) && divides(ideal.generator(v), label))
                    unique = false;
            // Removing a vertex keeps the label iff the vertex attains no coordinate alone.
            for (std::size_t drop = 0; drop < f.size() && unique; ++drop) {
                Face sub = f;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                if (face_label(ideal, sub) == label)
                    unique = false;
            }
            if (unique)
                keep.push_back(f);
        }
        if (keep.empty())
            break;
        levels.push_back(std::move(keep));
    }
    return LabeledComplex(ideal, SimplicialComplex::from_levels(std::move(levels)));
}

LabeledComplex taylor_complex(const MonomialIdeal& ideal, const Limits& limits)
{
    check_generator_cap(ideal, limits, "Taylor complex");
    if (ideal.size() >= 63 || (std::uint64_t{1} << ideal.size()) > limits.max_faces)
        throw CapExceeded("Taylor complex: face count", limits.max_faces);
    auto complex = enumerate_closed(ideal.size(), limits.max_faces, "Taylor complex",
                                    [](const Face&, Vertex) { return true; });
    return LabeledComplex(ideal, std::move(complex));
}

LabeledComplex clique_complex(const SimpleGraph& g, const MonomialIdeal& ideal, const Limits& limits)
{
    if (g.num_vertices() != ideal.size())
        throw DomainError("clique complex: graph and ideal have different vertex counts");
    auto complex = enumerate_closed(g.num_vertices(), limits.max_cliques, "clique complex",
                                    [&](const Face& f, Vertex v) {
                                        return std::all_of(f.begin(), f.end(),
                                                           [&](Vertex u) { return g.has_edge(u, v); });
                                    });
    return LabeledComplex(ideal, std::move(complex));
}

LabeledComplex skeleton(const LabeledComplex& c, int k)
{
    return LabeledComplex(c.ideal(), skeleton(c.complex(), k));
}

LabeledComplex subcomplex_dividing(const LabeledComplex& c, const Multidegree& m)
{
    if (m.size() != c.ideal().num_vars())
        throw LengthMismatch("subcomplex_dividing: degree length does not match ideal");
    const auto& complex = c.complex();
    if (complex.is_void())
        return c;
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
    return LabeledComplex(c.ideal(), SimplicialComplex::from_levels(std::move(levels)));
}

SimpleGraph one_skeleton(const SimplicialComplex& c, std::size_t num_vertices)
{
    SimpleGraph g(num_vertices);
    for (const Face& e : c.faces(1))
        g.add_edge(e[0], e[1]);
    return g;
}

bool is_connected(const SimpleGraph& g)
{
    const std::size_t n = g.num_vertices();
    if (n <= 1)
        return true;
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_planar(const SimpleGraph& g)
{
    const std::size_t v = g.num_vertices();
    const std::size_t e = g.num_edges();
    if (v >= 3 && e > 3 * v - 6)
        return false;
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                        boost::property<boost::vertex_index_t, int>,
                                        boost::property<boost::edge_index_t, int>>;
    Graph bg(v);
    for (const auto& [a, b] : g.edges())
        boost::add_edge(a, b, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

// ---------------------------------------------------------------------------
// Validation and output

std::string check_structure(const LabeledComplex& c)
{
    const auto& complex = c.complex();
    if (complex.is_void())
        return {};
    if (complex.faces(-1).size() != 1)
        return "missing empty face";
    for (int d = 0; d <= complex.dimension(); ++d) {
        const auto& faces = complex.faces(d);
        if (!std::is_sorted(faces.begin(), faces.end()))
            return "faces of dimension " + std::to_string(d) + " not sorted";
        for (std::size_t idx = 0; idx < faces.size(); ++idx) {
            const Face& f = faces[idx];
            if (f.size() != static_cast<std::size_t>(d + 1) || !strictly_increasing(f))
                return "malformed face " + face_key(f);
            if (c.label(d, idx) != face_label(c.ideal(), f))
                return "label of " + face_key(f) + " is not the lcm of its vertices";
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face sub = f;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                auto sub_idx = complex.index_of(sub);
                if (!sub_idx)
                    return "not downward closed: " + face_key(f) + " lacks " + face_key(sub);
                if (!divides(c.label(d - 1, *sub_idx), c.label(d, idx)))
                    return "label not monotone on " + face_key(sub) + " < " + face_key(f);
            }
        }
    }
    return {};
}

std::vector<std::vector<Multidegree>> faces_as_monomials(const LabeledComplex& c)
{
    std::vector<std::vector<Multidegree>> out;
    for (const Face& f : c.complex().all_faces()) {
        std::vector<Multidegree> mons;
        for (Vertex v : f)
            mons.push_back(c.ideal().generator(v));
        std::sort(mons.begin(), mons.end());
        out.push_back(std::move(mons));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string face_key(const Face& f)
{
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(f[i]);
    }
    return out;
}

std::string to_dot(const SimpleGraph& g, const MonomialIdeal& ideal)
{
    std::ostringstream os;
    os << "graph BuG {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        os << "  " << v << " [label=\"";
        if (v < ideal.size())
            os << format_monomial(ideal.generator(v));
        os << "\"];\n";
    }
    for (const auto& [a, b] : g.edges())
        os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const LabeledComplex& c)
{
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& g : c.ideal().generators())
        vertices.push_back(format_monomial(g));
    nlohmann::json faces = nlohmann::json::object();
    nlohmann::json labels = nlohmann::json::object();
    const auto& complex = c.complex();
    for (int d = 0; d <= complex.dimension(); ++d) {
        nlohmann::json level = nlohmann::json::array();
        const auto& fs = complex.faces(d);
        for (std::size_t idx = 0; idx < fs.size(); ++idx) {
            level.push_back(fs[idx]);
            labels[face_key(fs[idx])] = to_json(c.label(d, idx));
        }
        faces[std::to_string(d)] = std::move(level);
    }
    return {{"vertices", vertices}, {"faces", faces}, {"labels", labels}};
}

}  // namespace monores
