#include <gtest/gtest.h>

#include <numeric>

#include "loewy/analysis.hpp"
#include "loewy/families.hpp"
#include "oracles.hpp"

using namespace loewy;

namespace {

using Names = std::vector<std::string>;

Names series_names(const FiniteLattice& l) { return names(l, loewy_series(l).chain); }

/// Divisors of n selected by an arithmetic predicate, as identifiers.
template <class Pred>
Names divisors_where(std::uint64_t n, Pred pred) {
    Names out;
    for (auto d : oracle::divisors(n)) {
        if (pred(d)) out.push_back(std::to_string(d));
    }
    return out;
}

} // namespace

TEST(Atoms, DivisorTwelve) {
    const auto d12 = divisor_lattice(12);
    EXPECT_EQ(names(d12, atoms(d12)), (Names{"2", "3"}));
    EXPECT_EQ(names(d12, coatoms(d12)), divisors_where(12, [](auto d) { return oracle::prime(12 / d); }));
    EXPECT_TRUE(atoms(chain(0)).empty());
    EXPECT_TRUE(coatoms(chain(0)).empty());
}

TEST(Socle, Examples) {
    const auto d12 = divisor_lattice(12);
    EXPECT_EQ(d12.element(socle(d12)), "6");
    const auto m3 = diamond(3);
    EXPECT_EQ(socle(m3), m3.top());
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(socle(chain(n)), 1u);
    EXPECT_EQ(socle(chain(0)), 0u);
}

TEST(Radical, Examples) {
    const auto d12 = divisor_lattice(12);
    EXPECT_EQ(d12.element(radical(d12)), std::to_string(std::gcd(4, 6)));
    const auto ex = paper_example("ex8_7_3");
    EXPECT_EQ(ex.element(radical(ex)), "T");
    EXPECT_EQ(radical(diamond(3)), 0u);
}

TEST(Essentials, DivisorTwelveByBruteForce) {
    const auto d12 = divisor_lattice(12);
    // Oracle: x != 1 with gcd(x, y) != 1 for every divisor y != 1.
    const Names expected = divisors_where(12, [](std::uint64_t x) {
        if (x == 1) return false;
        for (auto y : oracle::divisors(12)) {
            if (y != 1 && std::gcd(x, y) == 1) return false;
        }
        return true;
    });
    const auto essentials = essential_elements(d12);
    EXPECT_EQ(names(d12, essentials), expected);
    EXPECT_EQ(expected, (Names{"6", "12"}));
    EXPECT_EQ(*essentials.members().begin(), socle(d12));
}

TEST(Essentials, ChainAndDegenerate) {
    const auto c = chain(4);
    EXPECT_EQ(names(c, essential_elements(c)), (Names{"1", "2", "3", "4"}));
    EXPECT_THROW(essential_elements(chain(0)), LatticeError);
}

TEST(LoewySeries, Examples) {
    const auto d12 = divisor_lattice(12);
    EXPECT_EQ(series_names(d12), (Names{"1", "6", "12"}));
    EXPECT_EQ(loewy_series(d12).length(), 2u);
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto c = chain(n);
        EXPECT_EQ(series_names(c), c.elements());
        EXPECT_EQ(loewy_series(c).length(), n);
    }
    EXPECT_EQ(series_names(paper_example("ex8_81")), (Names{"R", "R1R2", "S"}));
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto cube = boolean_cube(k);
        EXPECT_EQ(loewy_series(cube).chain, (std::vector<Index>{cube.bottom(), cube.top()}));
    }
}

TEST(LoewySeries, DivisorsAgainstArithmeticRecursion) {
    for (std::uint64_t n = 1; n <= 400; ++n) {
        const auto l = divisor_lattice(n);
        Names expected;
        for (auto s : oracle::divisor_loewy_series(n)) expected.push_back(std::to_string(s));
        ASSERT_EQ(series_names(l), expected) << n;
    }
}

TEST(LoewySeries, BetweenAndErrors) {
    const auto d12 = divisor_lattice(12);
    const auto s = loewy_series_between(d12, d12.index_of("2"), d12.top());
    EXPECT_EQ(names(d12, s.chain), (Names{"2", "12"}));
    EXPECT_THROW(loewy_series_between(d12, d12.index_of("4"), d12.index_of("6")), LatticeError);
}

TEST(Length, Examples) {
    EXPECT_EQ(lattice_length(divisor_lattice(12)), 3u);
    EXPECT_EQ(lattice_length(paper_example("ex8_7_3")), 3u);
    for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(lattice_length(chain(n)), n);
    EXPECT_EQ(lattice_length(pentagon()), 3u);
    for (std::uint64_t n = 1; n <= 300; ++n) ASSERT_EQ(lattice_length(divisor_lattice(n)), oracle::divisor_length(n)) << n;
}

TEST(Irreducibles, Examples) {
    const auto d12 = divisor_lattice(12);
    EXPECT_EQ(names(d12, join_irreducibles(d12)), (Names{"2", "3", "4"}));
    EXPECT_EQ(names(d12, meet_irreducibles(d12)), divisors_where(12, [](auto d) { return oracle::prime_power(12 / d); }));
    EXPECT_EQ(names(d12, meet_irreducibles(d12)), (Names{"3", "4", "6"}));
    const auto c = chain(5);
    EXPECT_EQ(join_irreducibles(c).size(), 5u);
    EXPECT_FALSE(join_irreducibles(c).contains(c.bottom()));
}

TEST(Flags, DistributiveAndModular) {
    EXPECT_TRUE(is_distributive(divisor_lattice(12)));
    EXPECT_FALSE(is_distributive(diamond(3)));
    EXPECT_TRUE(is_modular(diamond(3)));
    EXPECT_FALSE(is_distributive(pentagon()));
    EXPECT_FALSE(is_modular(pentagon()));
    EXPECT_TRUE(is_chain(chain(3)));
    EXPECT_FALSE(is_chain(divisor_lattice(6)));
    Limits tight;
    tight.cubic_scan = 4;
    EXPECT_THROW(is_distributive(divisor_lattice(12), tight), LatticeError);
}

TEST(Flags, AgreesWithBruteForceDistributivity) {
    for (const auto& l : {divisor_lattice(12), pentagon(), diamond(4), paper_example("ex8_7_1"), grid({1, 2}),
                          subspace_lattice(3, 2), subgroup_lattice_cyclic(30), chain(0)}) {
        EXPECT_EQ(is_distributive(l), oracle::brute_distributive(l)) << l.name();
    }
}

TEST(Flags, BooleanAndComplements) {
    EXPECT_TRUE(is_boolean(boolean_cube(3)));
    EXPECT_FALSE(is_boolean(pentagon()));
    EXPECT_TRUE(is_complemented(pentagon()));
    EXPECT_EQ(loewy_series(pentagon()).length(), 1u);
    const auto d12 = divisor_lattice(12);
    // Oracle: divisors d with gcd(2, d) = 1 and lcm(2, d) = 12.
    EXPECT_TRUE(divisors_where(12, [](auto d) { return std::gcd<std::uint64_t>(2, d) == 1 && std::lcm<std::uint64_t>(2, d) == 12; })
                    .empty());
    EXPECT_TRUE(complement_of(d12, d12.index_of("2")).empty());
    EXPECT_EQ(names(d12, complement_of(d12, d12.index_of("4"))), (Names{"3"}));
    EXPECT_TRUE(is_boolean(chain(0)));
    EXPECT_FALSE(is_boolean(d12));
}

TEST(Flags, Catenarian) {
    for (std::uint64_t n = 1; n <= 100; ++n) ASSERT_TRUE(is_catenarian(divisor_lattice(n))) << n;
    EXPECT_FALSE(is_catenarian(pentagon()));
    EXPECT_TRUE(is_catenarian(chain(6)));
    for (const auto& l : {pentagon(), diamond(3), divisor_lattice(60), paper_example("ex8_81")}) {
        EXPECT_EQ(is_catenarian(l), oracle::maximal_chain_lengths(l, l.bottom()).size() == 1) << l.name();
    }
}

TEST(Flags, PExtension) {
    const auto d12 = divisor_lattice(12);
    EXPECT_FALSE(is_p_extension(d12));
    ASSERT_TRUE(p_extension_witness(d12).has_value());
    EXPECT_EQ(d12.element(*p_extension_witness(d12)), "4");
    EXPECT_TRUE(is_p_extension(paper_example("ex8_7_3")));
    EXPECT_TRUE(is_p_extension(diamond(3)));
    EXPECT_FALSE(p_extension_witness(diamond(3)).has_value());
}

TEST(Analyze, DivisorTwelve) {
    const auto d12 = divisor_lattice(12);
    const auto r = analyze(d12);
    EXPECT_EQ(r.cardinality, oracle::divisors(12).size());
    EXPECT_EQ(r.loewy_length(), 2u);
    EXPECT_EQ(r.lattice_length, 3u);
    EXPECT_EQ(r.layer_sizes, (std::vector<std::size_t>{4, 2}));
    EXPECT_EQ(r.flags.is_distributive, std::optional<bool>(true));
    EXPECT_EQ(r.flags.is_boolean, std::optional<bool>(false));
    EXPECT_TRUE(r.flags.is_catenarian);
    EXPECT_FALSE(r.flags.is_p_extension);
    EXPECT_FALSE(r.flags.is_chain);
}

TEST(Analyze, CubicFlagsSkippedAboveCap) {
    Limits tight;
    tight.cubic_scan = 5;
    const auto r = analyze(divisor_lattice(12), tight);
    EXPECT_FALSE(r.flags.is_distributive.has_value());
    EXPECT_FALSE(r.flags.is_modular.has_value());
    EXPECT_FALSE(r.flags.is_boolean.has_value());
    EXPECT_TRUE(r.flags.is_catenarian);
}

TEST(Analyze, Degenerate) {
    const auto r = analyze(chain(0));
    EXPECT_EQ(r.cardinality, 1u);
    EXPECT_FALSE(r.essentials.has_value());
    EXPECT_EQ(r.loewy_length(), 0u);
    EXPECT_TRUE(r.layer_sizes.empty());
}
