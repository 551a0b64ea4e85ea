#include "monores/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monores {

namespace {

void require_same_length(const Multidegree& a, const Multidegree& b)
{
    if (a.size() != b.size())
        throw LengthMismatch("multidegree lengths differ: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
}

}  // namespace

Multidegree::Multidegree(std::initializer_list<Exponent> exps) : exps_(exps) {}

Multidegree::Multidegree(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

bool Multidegree::is_one() const noexcept
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Multidegree::total_degree() const noexcept
{
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::size_t MultidegreeHash::operator()(const Multidegree& m) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exponent e : m.exponents()) {
        h ^= e;
        h *= 0x100000001b3ull;
    }
    return h;
}

bool divides(const Multidegree& a, const Multidegree& b)
{
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

bool properly_divides(const Multidegree& a, const Multidegree& b)
{
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] == 0) {
            if (a[i] != 0)
                return false;
        } else if (a[i] >= b[i]) {
            return false;
        }
    }
    return true;
}

Multidegree lcm(const Multidegree& a, const Multidegree& b)
{
    require_same_length(a, b);
    Multidegree out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

Multidegree lcm_of(std::span<const Multidegree> faces, std::size_t n)
{
    Multidegree out(n);
    for (const auto& f : faces) {
        if (f.size() != n)
            throw LengthMismatch("lcm_of: expected length " + std::to_string(n) + ", got " +
                                 std::to_string(f.size()));
        for (std::size_t i = 0; i < n; ++i)
            out[i] = std::max(out[i], f[i]);
    }
    return out;
}

Multidegree quotient(const Multidegree& b, const Multidegree& a)
{
    if (!divides(a, b))
        throw DomainError("quotient: divisor does not divide dividend");
    Multidegree out = b;
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = b[i] - a[i];
    return out;
}

Multidegree MonomialIdeal::top() const
{
    return lcm_of(gens_, n_);
}

std::size_t MonomialIdeal::index_of(const Multidegree& m) const
{
    auto it = std::lower_bound(gens_.begin(), gens_.end(), m);
    if (it != gens_.end() && *it == m)
        return static_cast<std::size_t>(it - gens_.begin());
    return gens_.size();
}

MonomialIdeal minimalize(std::span<const Multidegree> raw, std::size_t n)
{
    std::vector<Multidegree> pool(raw.begin(), raw.end());
    for (const auto& m : pool) {
        if (m.size() != n)
            throw LengthMismatch("generator has " + std::to_string(m.size()) + " exponents, expected " +
                                 std::to_string(n));
        if (m.is_one())
            throw DomainError("the unit monomial generates the whole ring");
        for (Exponent e : m.exponents())
            if (e > kMaxExponent)
                throw DomainError("exponent " + std::to_string(e) + " exceeds supported maximum");
    }

    // Sorting by total degree first means any divisor of m is seen before m.
    std::sort(pool.begin(), pool.end(), [](const Multidegree& a, const Multidegree& b) {
        auto da = a.total_degree(), db = b.total_degree();
        return da != db ? da < db : a < b;
    });
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::vector<Multidegree> kept;
    for (const auto& m : pool) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Multidegree& k) { return divides(k, m); });
        if (!dominated)
            kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end());
    return MonomialIdeal(n, std::move(kept));
}

MonomialIdeal minimalize(const std::vector<Multidegree>& raw)
{
    if (raw.empty())
        throw DomainError("cannot infer variable count from an empty generator list");
    return minimalize(std::span<const Multidegree>(raw), raw.front().size());
}

MonomialIdeal restrict(const MonomialIdeal& ideal, const Multidegree& m)
{
    if (m.size() != ideal.num_vars())
        throw LengthMismatch("restrict: degree length does not match ideal");
    std::vector<Multidegree> keep;
    for (const auto& g : ideal.generators())
        if (divides(g, m))
            keep.push_back(g);
    return minimalize(std::span<const Multidegree>(keep), ideal.num_vars());
}

bool is_strongly_generic(const MonomialIdeal& ideal)
{
    const auto& g = ideal.generators();
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            for (std::size_t i = 0; i < ideal.num_vars(); ++i)
                if (g[a][i] == g[b][i] && g[a][i] != 0)
                    return false;
    return true;
}

bool is_generic(const MonomialIdeal& ideal)
{
    const auto& g = ideal.generators();
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            bool shares = false;
            for (std::size_t i = 0; i < ideal.num_vars() && !shares; ++i)
                shares = g[a][i] == g[b][i] && g[a][i] != 0;
            if (!shares)
                continue;
            const Multidegree l = lcm(g[a], g[b]);
            bool witnessed = false;
            for (std::size_t c = 0; c < g.size() && !witnessed; ++c)
                witnessed = c != a && c != b && properly_divides(g[c], l);
            if (!witnessed)
                return false;
        }
    }
    return true;
}

MonomialIdeal ibar_extend(const MonomialIdeal& ideal, const Multidegree& u, const Multidegree& extra)
{
    const std::size_t n = ideal.num_vars();
    if (u.size() != n)
        throw LengthMismatch("ibar_extend: u must have one entry per variable of I");
    if (extra.size() <= n)
        throw PreconditionError("ibar_extend: M must live in a ring with more variables than I");
    for (std::size_t i = 0; i < n; ++i)
        if (extra[i] != 0)
            throw PreconditionError("ibar_extend: M involves variable x" + std::to_string(i + 1) + " of I");
    for (std::size_t i = 0; i < n; ++i)
        if (u[i] > kMaxExponent - 1)
            throw DomainError("ibar_extend: u entry too large");
    for (const auto& g : ideal.generators())
        if (!divides(g, u))
            throw PreconditionError("ibar_extend: generator " + format_monomial(g) + " does not divide x^u");

    const std::size_t total = extra.size();
    std::vector<Multidegree> gens;
    for (const auto& g : ideal.generators()) {
        Multidegree lifted(total);
        for (std::size_t i = 0; i < n; ++i)
            lifted[i] = g[i];
        gens.push_back(std::move(lifted));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Multidegree power = extra;
        power[i] = u[i] + 1;
        gens.push_back(std::move(power));
    }
    return minimalize(std::span<const Multidegree>(gens), total);
}

std::string format_monomial(const Multidegree& m)
{
    if (m.is_one())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            os << '*';
        first = false;
        os << 'x' << (i + 1);
        if (m[i] != 1)
            os << '^' << m[i];
    }
    return os.str();
}

}  // namespace monores
