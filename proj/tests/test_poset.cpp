#include <doctest.h>

#include "monores/complex.hpp"
#include "monores/errors.hpp"
#include "monores/homology.hpp"
#include "monores/io.hpp"
#include "monores/poset.hpp"
#include "monores/random.hpp"
#include "oracles.hpp"

using namespace monores;

namespace {

MonomialIdeal ex_ideal()
{
    return read_ideal_file(MONORES_TEST_DATA "/ex.txt").ideal;
}

MonomialIdeal random_small(std::uint64_t seed, std::size_t max_n, std::size_t max_r)
{
    std::mt19937_64 rng(seed);
    IdealRandomSpec spec;
    spec.n = uniform_int(rng, 2, max_n);
    spec.r = uniform_int(rng, 1, max_r);
    spec.max_degree = static_cast<Exponent>(uniform_int(rng, 1, 5));
    spec.seed = seed;
    return random_ideal(spec);
}

std::vector<Multidegree> multidegrees(const FinitePoset& p)
{
    std::vector<Multidegree> out;
    for (const auto& e : p.elements())
        out.push_back(std::get<Multidegree>(e));
    std::sort(out.begin(), out.end());
    return out;
}

FinitePoset chain(std::size_t k)
{
    std::vector<PosetElement> elems;
    for (std::uint32_t i = 0; i < k; ++i)
        elems.emplace_back(IndexSet{i});
    return FinitePoset(elems, [](std::size_t a, std::size_t b) { return a <= b; });
}

FinitePoset antichain(std::size_t k)
{
    std::vector<PosetElement> elems;
    for (std::uint32_t i = 0; i < k; ++i)
        elems.emplace_back(IndexSet{i});
    return FinitePoset(elems, [](std::size_t a, std::size_t b) { return a == b; });
}

}  // namespace

TEST_CASE("lcm lattice")
{
    const auto single = lcm_lattice(minimalize({{1}}));
    CHECK(single.size() == 2);
    CHECK(single.elements()[0].is_one());

    const auto ex = ex_ideal();
    const auto lattice = lcm_lattice(ex);
    CHECK(lattice.contains({0, 0, 0, 0}));
    for (const auto& g : ex.generators())
        CHECK(lattice.contains(g));
    CHECK(lattice.contains({2, 0, 2, 0}));
    CHECK(lattice.top() == ex.top());

    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto ideal = random_small(seed, 5, 8);
        const auto l = lcm_lattice(ideal);
        std::vector<oracle::Vec> gens;
        for (const auto& g : ideal.generators())
            gens.push_back(g.vec());
        const auto expected = oracle::lattice(gens, ideal.num_vars());
        CHECK(l.size() == expected.size());
        CHECK(l.size() <= (std::size_t{1} << ideal.size()));
        for (const auto& e : l.elements())
            CHECK(expected.count(e.vec()) == 1);
        for (std::size_t a = 0; a < l.size(); a += 3)
            for (std::size_t b = 0; b < l.size(); b += 5)
                CHECK(l.contains(lcm(l.elements()[a], l.elements()[b])));
    }
    Limits tight;
    tight.max_lattice = 4;
    CHECK_THROWS_AS(lcm_lattice(ex, tight), CapExceeded);
}

TEST_CASE("open intervals")
{
    const auto ideal = minimalize({{2, 0}, {0, 2}, {1, 1}});
    const auto lattice = lcm_lattice(ideal);
    CHECK(open_interval(lattice, {2, 0}).empty());
    const auto interval = open_interval(lattice, {2, 2});
    CHECK(multidegrees(interval) == std::vector<Multidegree>{{0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}});
    CHECK(interval.size() == lattice.size() - 2);
    CHECK_THROWS_AS(open_interval(lattice, {3, 3}), DomainError);
}

TEST_CASE("Buchberger degrees")
{
    const auto ex = ex_ideal();
    const auto lattice = lcm_lattice(ex);
    CHECK_FALSE(is_buchberger_degree(lattice, {2, 0, 2, 0}));
    for (const auto& g : ex.generators())
        CHECK(is_buchberger_degree(lattice, g));
    const auto p = buchberger_degree_poset(lattice);
    const auto degrees = multidegrees(p);
    CHECK_FALSE(std::binary_search(degrees.begin(), degrees.end(), Multidegree{2, 0, 2, 0}));
    CHECK_THROWS_AS(is_buchberger_degree(lattice, {5, 0, 0, 0}), DomainError);

    // squarefree: everything but 1
    const auto sq = read_ideal_file(MONORES_TEST_DATA "/xyz.txt").ideal;
    const auto sq_lattice = lcm_lattice(sq);
    CHECK(buchberger_degree_poset(sq_lattice).size() == sq_lattice.size() - 1);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto ideal = random_small(300 + seed, 4, 6);
        const auto l = lcm_lattice(ideal);
        const auto pi = buchberger_degree_poset(l);
        for (std::size_t k = 0; k < pi.size(); ++k) {
            const auto& m = std::get<Multidegree>(pi.element(k));
            CHECK(is_buchberger_degree(l, m));
            // downward closed within L minus {1}
            for (const auto& e : l.elements())
                if (!e.is_one() && divides(e, m))
                    CHECK(is_buchberger_degree(l, e));
        }
    }
}

TEST_CASE("agreement posets")
{
    const auto ideal = minimalize({{2, 0}, {0, 2}, {1, 1}});
    const auto lattice = lcm_lattice(ideal);
    CHECK(agreement_poset(lattice, {2, 0}).empty());
    const auto b = agreement_poset(lattice, {2, 2});
    // interval elements x^2, y^2, xy, x^2y, xy^2 agree with x^2y^2 on {1}, {2}, {}, {1}, {2}
    std::vector<IndexSet> sets;
    for (const auto& e : b.elements())
        sets.push_back(std::get<IndexSet>(e));
    std::sort(sets.begin(), sets.end());
    CHECK(sets == std::vector<IndexSet>{{}, {0}, {1}});

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto ideal2 = random_small(700 + seed, 4, 6);
        const auto l = lcm_lattice(ideal2);
        for (const auto& m : l.elements()) {
            if (m.is_one())
                continue;
            const auto h_interval = reduced_homology(order_complex(open_interval(l, m)));
            const auto h_agree = reduced_homology(order_complex(agreement_poset(l, m)));
            CHECK(h_interval == h_agree);
        }
    }
}

TEST_CASE("order complexes")
{
    CHECK(f_vector(order_complex(antichain(4))) == std::vector<std::size_t>{4});
    CHECK(order_complex(chain(4)).facets() == std::vector<Face>{{0, 1, 2, 3}});
    CHECK(order_complex(antichain(0)) == SimplicialComplex::empty_face_only());
    // unique maximum: cone
    const auto ideal = minimalize({{2, 0}, {0, 2}, {1, 1}});
    const auto lattice = lcm_lattice(ideal);
    auto whole = lattice.as_poset();
    CHECK(reduced_homology(order_complex(whole)).all_zero());
    CHECK_THROWS_AS(order_complex(chain(12), 100), CapExceeded);
}

TEST_CASE("crosscut complexes")
{
    const auto c1 = crosscut_complex(antichain(1), {0});
    CHECK(c1.facets() == std::vector<Face>{{0}});
    // a poset with a global maximum: atoms bound everything
    const auto ideal = minimalize({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto lattice = lcm_lattice(ideal);
    const auto poset = lattice.as_poset();
    std::vector<std::size_t> atoms;
    for (const auto& g : ideal.generators())
        atoms.push_back(*lattice.index_of(g));
    CHECK(crosscut_complex(poset, atoms).facets() == std::vector<Face>{{0, 1, 2}});
    CHECK_THROWS(crosscut_complex(chain(3), {0, 1}));

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto ideal2 = random_small(900 + seed, 5, 8);
        const auto l = lcm_lattice(ideal2);
        const auto pi = buchberger_degree_poset(l);
        std::vector<std::size_t> positions;
        for (const auto& g : ideal2.generators())
            for (std::size_t k = 0; k < pi.size(); ++k)
                if (std::get<Multidegree>(pi.element(k)) == g)
                    positions.push_back(k);
        REQUIRE(positions.size() == ideal2.size());
        const auto cross = crosscut_complex(pi, positions, Boundedness::upper_only);
        CHECK(cross == buchberger_complex(ideal2).complex());
        CHECK(reduced_homology(cross) == reduced_homology(order_complex(pi)));
    }
}

TEST_CASE("poset structure and json")
{
    const auto p = chain(3);
    CHECK(p.cover_relations() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK_FALSE(p.leq(2, 0));
    CHECK(p.linear_extension() == std::vector<std::size_t>{0, 1, 2});
    const auto j = to_json(p);
    CHECK(j["elements"].size() == 3);
    CHECK(j["cover_relations"].size() == 2);
    CHECK_THROWS(FinitePoset({IndexSet{0}, IndexSet{1}}, [](std::size_t, std::size_t) { return true; }));
}
