#include "monores/random.hpp"

#include <algorithm>
#include <numeric>

namespace monores {

std::string to_string(IdealMode mode)
{
    return mode == IdealMode::arbitrary ? "arbitrary" : "strongly-generic";
}

IdealMode parse_ideal_mode(std::string_view text)
{
    if (text == "arbitrary")
        return IdealMode::arbitrary;
    if (text == "strongly-generic")
        return IdealMode::strongly_generic;
    throw DomainError("unknown ideal mode '" + std::string(text) + "'");
}

void IdealRandomSpec::validate() const
{
    if (n < 1 || r < 1 || max_degree < 1)
        throw DomainError("random ideal spec needs n >= 1, r >= 1, max_degree >= 1");
    if (max_degree > kMaxExponent)
        throw DomainError("max_degree exceeds supported exponent range");
    if (mode == IdealMode::strongly_generic && max_degree < r)
        throw DomainError("strongly generic mode needs max_degree >= r");
}

std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0})
        return rng();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + x % range;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

MonomialIdeal draw_arbitrary(const IdealRandomSpec& spec, std::mt19937_64& rng)
{
    std::vector<Multidegree> raw;
    raw.reserve(spec.r);
    while (raw.size() < spec.r) {
        Multidegree m(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i)
            m[i] = static_cast<Exponent>(uniform_int(rng, 0, spec.max_degree));
        if (!m.is_one())
            raw.push_back(std::move(m));
    }
    return minimalize(std::span<const Multidegree>(raw), spec.n);
}

std::vector<Multidegree> draw_strongly_generic(const IdealRandomSpec& spec, std::mt19937_64& rng)
{
    std::vector<Multidegree> raw(spec.r, Multidegree(spec.n));
    std::vector<Exponent> values(spec.max_degree);
    for (std::size_t i = 0; i < spec.n; ++i) {
        std::iota(values.begin(), values.end(), Exponent{1});
        // Fisher-Yates with the portable draw.
        for (std::size_t k = values.size(); k > 1; --k)
            std::swap(values[k - 1], values[uniform_int(rng, 0, k - 1)]);
        std::size_t next = 0;
        for (std::size_t g = 0; g < spec.r; ++g) {
            // Zero with probability 1/(n+1) so supports vary.
            if (uniform_int(rng, 0, spec.n) == 0)
                continue;
            raw[g][i] = values[next++];
        }
    }
    return raw;
}

}  // namespace

MonomialIdeal random_ideal(const IdealRandomSpec& spec)
{
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    if (spec.mode == IdealMode::arbitrary)
        return draw_arbitrary(spec, rng);

    for (int attempt = 0; attempt < kStronglyGenericRetries; ++attempt) {
        auto raw = draw_strongly_generic(spec, rng);
        if (std::any_of(raw.begin(), raw.end(), [](const Multidegree& m) { return m.is_one(); }))
            continue;
        auto ideal = minimalize(std::span<const Multidegree>(raw), spec.n);
        if (ideal.size() == spec.r && is_strongly_generic(ideal))
            return ideal;
    }
    throw DomainError("strongly generic sampling exhausted its retry budget of " +
                      std::to_string(kStronglyGenericRetries));
}

}  // namespace monores
