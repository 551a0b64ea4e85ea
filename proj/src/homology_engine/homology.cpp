#include "monores/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace monores {

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic)
{
    if (p_ != 0 && !linalg::is_prime(p_))
        throw DomainError("field characteristic " + std::to_string(p_) + " is not prime");
}

std::string FieldSpec::name() const
{
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

std::vector<FieldSpec> default_fields()
{
    return {FieldSpec(0), FieldSpec(2), FieldSpec(3), FieldSpec(32003)};
}

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c)
{
    std::vector<BoundaryMatrix> out;
    for (int d = 0; d <= c.dimension(); ++d) {
        const auto& cols = c.faces(d);
        const auto& rows = c.faces(d - 1);
        BoundaryMatrix b;
        b.dimension = d;
        b.matrix.rows = rows.size();
        b.matrix.cols = cols.size();
        b.matrix.columns.resize(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Face& f = cols[j];
            auto& column = b.matrix.columns[j];
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face sub = f;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                auto idx = c.index_of(sub);
                if (!idx)
                    throw DomainError("boundary_matrices: complex is not downward closed");
                column.push_back({static_cast<std::uint32_t>(*idx), drop % 2 == 0 ? 1 : -1});
            }
            std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
        }
        out.push_back(std::move(b));
    }
    return out;
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper)
{
    if (lower.matrix.cols != upper.matrix.rows)
        throw LengthMismatch("composes_to_zero: inner dimensions differ");
    for (const auto& col : upper.matrix.columns) {
        std::map<std::uint32_t, std::int64_t> acc;
        for (const auto& e : col)
            for (const auto& f : lower.matrix.columns[e.row])
                acc[f.row] += e.value * f.value;
        for (const auto& [row, v] : acc)
            if (v != 0)
                return false;
    }
    return true;
}

std::size_t rank_over(const linalg::SparseMatrix& m, FieldSpec field)
{
    if (field.characteristic() == 0)
        return linalg::rank_rational(m);
    return linalg::rank_mod_p(m, field.characteristic());
}

std::size_t HomologyRanks::at(int k) const
{
    const auto slot = static_cast<std::size_t>(k + 1);
    return k >= -1 && slot < reduced.size() ? reduced[slot] : 0;
}

bool HomologyRanks::all_zero() const
{
    return std::all_of(reduced.begin(), reduced.end(), [](std::size_t r) { return r == 0; });
}

bool operator==(const HomologyRanks& a, const HomologyRanks& b)
{
    const auto& longer = a.reduced.size() >= b.reduced.size() ? a.reduced : b.reduced;
    const auto& shorter = a.reduced.size() >= b.reduced.size() ? b.reduced : a.reduced;
    return std::equal(shorter.begin(), shorter.end(), longer.begin()) &&
           std::all_of(longer.begin() + static_cast<std::ptrdiff_t>(shorter.size()), longer.end(),
                       [](std::size_t r) { return r == 0; });
}

std::string HomologyRanks::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(reduced[i]);
    }
    return out + "]";
}

HomologyRanks reduced_homology(const SimplicialComplex& c, FieldSpec field)
{
    HomologyRanks out;
    if (c.is_void())
        return out;
    const auto boundaries = boundary_matrices(c);
    // rank_of[d] = rank ∂_d for d = 0..dim; ∂_{dim+1} = 0
    std::vector<std::size_t> rank_of(boundaries.size() + 1, 0);
    for (std::size_t d = 0; d < boundaries.size(); ++d)
        rank_of[d] = rank_over(boundaries[d].matrix, field);
    // h̃_{-1} = dim C_{-1} - rank ∂_0
    out.reduced.push_back(1 - rank_of[0]);
    for (int d = 0; d <= c.dimension(); ++d) {
        const std::size_t chains = c.faces(d).size();
        out.reduced.push_back(chains - rank_of[static_cast<std::size_t>(d)] - rank_of[static_cast<std::size_t>(d) + 1]);
    }
    return out;
}

bool is_acyclic(const SimplicialComplex& c, FieldSpec field)
{
    if (!c.has_vertices())
        return true;
    return reduced_homology(c, field).all_zero();
}

bool IntegralHomology::torsion_free() const
{
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

bool IntegralHomology::all_zero() const
{
    return torsion_free() && std::all_of(free_ranks.begin(), free_ranks.end(), [](std::size_t r) { return r == 0; });
}

IntegralHomology integral_homology(const SimplicialComplex& c, const Limits& limits)
{
    if (c.num_faces() > limits.max_integral_faces)
        throw CapExceeded("integral homology: face count", limits.max_integral_faces);
    IntegralHomology out;
    if (c.is_void())
        return out;
    const auto boundaries = boundary_matrices(c);
    std::vector<std::vector<linalg::BigInt>> invariants;
    for (const auto& b : boundaries)
        invariants.push_back(linalg::smith_invariants(b.matrix));
    invariants.emplace_back();  // ∂_{dim+1} = 0

    auto torsion_of = [](const std::vector<linalg::BigInt>& inv) {
        std::vector<linalg::BigInt> t;
        for (const auto& d : inv)
            if (d > 1)
                t.push_back(d);
        return t;
    };
    // H̃_{-1}: cokernel of ∂_0 on the one-dimensional C_{-1}
    out.free_ranks.push_back(1 - invariants[0].size());
    out.torsion.push_back(torsion_of(invariants[0]));
    for (int d = 0; d <= c.dimension(); ++d) {
        const auto k = static_cast<std::size_t>(d);
        out.free_ranks.push_back(c.faces(d).size() - invariants[k].size() - invariants[k + 1].size());
        out.torsion.push_back(torsion_of(invariants[k + 1]));
    }
    return out;
}

std::string dump_triplets(const linalg::SparseMatrix& m)
{
    std::ostringstream os;
    os << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& e : m.columns[c])
            os << e.row << ' ' << c << ' ' << e.value << '\n';
    return os.str();
}

long long reduced_euler_characteristic(const SimplicialComplex& c)
{
    long long chi = 0;
    for (int d = -1; d <= c.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.faces(d).size());
    return chi;
}

}  // namespace monores
