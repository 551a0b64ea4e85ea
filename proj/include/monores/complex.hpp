#ifndef MONORES_COMPLEX_HPP
#define MONORES_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "monores/limits.hpp"
#include "monores/monomial.hpp"

namespace monores {

using Vertex = std::uint32_t;

/// Strictly increasing list of vertex indices.
using Face = std::vector<Vertex>;

/**
 * A finite abstract simplicial complex, stored as its faces grouped by
 * dimension, each group in lexicographic order. The empty face is a member
 * of every non-void complex. The void complex (no faces at all) is the
 * default-constructed value.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// The complex {∅}.
    static SimplicialComplex empty_face_only();

    /// Validates sortedness and downward closure; duplicates are removed.
    static SimplicialComplex from_faces(std::vector<Face> faces);

    /// All subsets of the given facets.
    static SimplicialComplex from_facets(const std::vector<Face>& facets,
                                         std::size_t max_faces = Limits{}.max_faces);

    /// Trusts the caller: by_dim[d + 1] holds sorted, duplicate-free faces of dimension d.
    static SimplicialComplex from_levels(std::vector<std::vector<Face>> by_dim);

    bool is_void() const noexcept { return by_dim_.empty(); }
    /// True when some vertex is present.
    bool has_vertices() const noexcept { return by_dim_.size() > 1; }
    /// -1 for {∅}; -2 for the void complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 2; }

    std::size_t num_faces() const noexcept;
    /// Faces of dimension d (d >= -1); empty when d exceeds the dimension.
    const std::vector<Face>& faces(int d) const;
    std::optional<std::size_t> index_of(const Face& f) const;
    bool contains(const Face& f) const { return index_of(f).has_value(); }

    std::vector<Vertex> vertices() const;
    std::vector<Face> facets() const;
    /// Ordered by dimension, then lexicographically.
    std::vector<Face> all_faces() const;

    /// Is every face of `this` a face of `other`?
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::vector<Face>> by_dim_;
};

/// Face counts (f_0, f_1, ...), empty face excluded.
std::vector<std::size_t> f_vector(const SimplicialComplex& c);

/// Faces of dimension <= k.
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

/// Relabel every vertex v as perm[v] and re-sort.
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<Vertex>& perm);

/**
 * Simplicial complex on generator indices of an ideal, each face labeled by
 * the lcm of its vertex generators.
 */
class LabeledComplex {
public:
    LabeledComplex(MonomialIdeal ideal, SimplicialComplex complex);

    const MonomialIdeal& ideal() const noexcept { return ideal_; }
    const SimplicialComplex& complex() const noexcept { return complex_; }
    const Multidegree& label(int d, std::size_t index) const { return labels_[static_cast<std::size_t>(d + 1)][index]; }
    Multidegree label(const Face& f) const;

    friend bool operator==(const LabeledComplex& a, const LabeledComplex& b)
    {
        return a.ideal_ == b.ideal_ && a.complex_ == b.complex_;
    }

private:
    MonomialIdeal ideal_;
    SimplicialComplex complex_;
    std::vector<std::vector<Multidegree>> labels_;
};

Multidegree face_label(const MonomialIdeal& ideal, const Face& f);

/// Undirected graph without loops or multi-edges.
class SimpleGraph {
public:
    explicit SimpleGraph(std::size_t n = 0) : adj_(n) {}

    void add_edge(Vertex a, Vertex b);
    bool has_edge(Vertex a, Vertex b) const;
    std::size_t num_vertices() const noexcept { return adj_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    /// Sorted (a < b) pairs in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    static SimpleGraph complete(std::size_t n);

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Edge {i, j} iff no generator properly divides lcm(g_i, g_j).
SimpleGraph buchberger_graph(const MonomialIdeal& ideal);

/// All generator subsets whose lcm has no proper divisor among the generators.
LabeledComplex buchberger_complex(const MonomialIdeal& ideal, const Limits& limits = {});

/// Subsets whose lcm is attained by no other subset.
LabeledComplex scarf_complex(const MonomialIdeal& ideal, const Limits& limits = {});

/// Full simplex on the generators.
LabeledComplex taylor_complex(const MonomialIdeal& ideal, const Limits& limits = {});

/// Vertex sets of complete subgraphs of g, labeled through `ideal`.
LabeledComplex clique_complex(const SimpleGraph& g, const MonomialIdeal& ideal, const Limits& limits = {});

LabeledComplex skeleton(const LabeledComplex& c, int k);

/// Faces whose label divides m.
LabeledComplex subcomplex_dividing(const LabeledComplex& c, const Multidegree& m);

/// Edge set of the 1-skeleton.
SimpleGraph one_skeleton(const SimplicialComplex& c, std::size_t num_vertices);

bool is_connected(const SimpleGraph& g);
bool is_planar(const SimpleGraph& g);

/**
 * Checks sortedness, downward closure and label monotonicity. Returns an
 * empty string when all hold, otherwise a description of the first failure.
 */
std::string check_structure(const LabeledComplex& c);

/// Faces rendered as sets of generator exponent vectors; independent of vertex numbering.
std::vector<std::vector<Multidegree>> faces_as_monomials(const LabeledComplex& c);

std::string to_dot(const SimpleGraph& g, const MonomialIdeal& ideal);
nlohmann::json to_json(const LabeledComplex& c);
std::string face_key(const Face& f);

}  // namespace monores

#endif  // MONORES_COMPLEX_HPP
