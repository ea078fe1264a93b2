#include <gtest/gtest.h>

#include "loewy/analysis.hpp"
#include "loewy/families.hpp"
#include "loewy/suites.hpp"

using namespace loewy;

namespace {

std::string describe(const VerificationReport& r) {
    std::string out;
    for (const auto& f : r.failures) out += f.instance + ": " + f.clause + "\n";
    return out;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const LatticeError& e) {
        return e.code();
    }
    return ErrorCode::Syntax;
}

} // namespace

TEST(DivisorLaws, Examples) {
    for (std::uint64_t n : {12u, 30u, 360u, 2u, 1024u, 9699690u}) {
        const auto r = verify_divisor_laws(n);
        EXPECT_TRUE(r.passed()) << n << "\n" << describe(r);
        EXPECT_EQ(r.instances_checked, 1u);
        EXPECT_EQ(r.suite, "thm8131");
    }
    const auto d30 = divisor_lattice(30);
    EXPECT_TRUE(is_boolean(d30));
    EXPECT_EQ(loewy_series(d30).length(), 1u);
    const auto d360 = divisor_lattice(360);
    EXPECT_EQ(loewy_series(d360).length(), 3u);
    EXPECT_EQ(lattice_length(d360), 6u);
    EXPECT_EQ(d360.size(), 24u);
    EXPECT_EQ(code_of([] { verify_divisor_laws(1); }), ErrorCode::Range);
}

TEST(CoreLaws, Examples) {
    for (const auto& l : {divisor_lattice(12), pentagon(), chain(2), chain(0), diamond(5), subspace_lattice(5, 2)}) {
        const auto r = verify_core_laws(l);
        EXPECT_TRUE(r.passed()) << l.name() << "\n" << describe(r);
    }
}

TEST(DistributiveLaws, Examples) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        const auto r = verify_distributive_laws(divisor_lattice(n));
        ASSERT_TRUE(r.passed()) << n << "\n" << describe(r);
    }
    EXPECT_TRUE(verify_distributive_laws(grid({2, 3})).passed());
    EXPECT_EQ(code_of([] { verify_distributive_laws(diamond(3)); }), ErrorCode::Precondition);
    EXPECT_EQ(code_of([] { verify_distributive_laws(pentagon()); }), ErrorCode::Precondition);
}

TEST(PExtensionLaws, Examples) {
    const auto ex = paper_example("ex8_7_3");
    EXPECT_TRUE(verify_p_extension_laws(ex).passed());
    EXPECT_EQ(ex.element(radical(ex)), "T");
    EXPECT_EQ(ex.element(socle(ex)), "T");
    EXPECT_TRUE(verify_p_extension_laws(diamond(3)).passed());
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(verify_p_extension_laws(chain(n)).passed());
    EXPECT_EQ(code_of([] { verify_p_extension_laws(divisor_lattice(12)); }), ErrorCode::Precondition);
}

TEST(ProductLaws, Examples) {
    EXPECT_TRUE(verify_product_laws(chain(1), chain(2)).passed());
    EXPECT_EQ(loewy_series(chain(1)).length(), 1u);
    EXPECT_EQ(loewy_series(chain(2)).length(), 2u);
    const auto cube_squared = product(boolean_cube(2), boolean_cube(2));
    EXPECT_TRUE(verify_product_laws(boolean_cube(2), boolean_cube(2)).passed());
    EXPECT_EQ(loewy_series(cube_squared).length(), 1u);
    EXPECT_TRUE(verify_product_laws(divisor_lattice(4), divisor_lattice(9)).passed());
    const auto p = product(divisor_lattice(4), divisor_lattice(9));
    const auto d36 = divisor_lattice(36);
    const auto iso = find_isomorphism(p, d36);
    ASSERT_TRUE(iso.has_value());
    const auto ps = loewy_series(p).chain;
    const auto ds = loewy_series(d36).chain;
    ASSERT_EQ(ps.size(), ds.size());
    for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ((*iso)[ps[i]], ds[i]);
}

TEST(Campaign, Divisor) {
    Campaign c;
    c.suite = Suite::Divisor;
    c.max_n = 300;
    const auto r = run_campaign(c);
    EXPECT_TRUE(r.passed()) << describe(r);
    EXPECT_EQ(r.instances_checked, 299u);
    EXPECT_TRUE(r.skipped.empty());
}

TEST(Campaign, DistributiveFixturesSkipNonDistributive) {
    Campaign c;
    c.suite = Suite::Distributive;
    const auto r = run_campaign(c);
    EXPECT_TRUE(r.passed()) << describe(r);
    bool saw_pentagon = false;
    for (const auto& s : r.skipped) {
        if (s.instance == "pentagon") {
            saw_pentagon = true;
            EXPECT_EQ(s.reason.rfind("E_PRECONDITION", 0), 0u) << s.reason;
        }
    }
    EXPECT_TRUE(saw_pentagon);
    EXPECT_EQ(r.instances_checked + r.skipped.size(), fixture_corpus().size());
}

TEST(Campaign, SeededIsDeterministic) {
    Campaign c;
    c.suite = Suite::Distributive;
    c.seed = 11;
    c.count = 25;
    const auto a = run_campaign(c);
    const auto b = run_campaign(c);
    EXPECT_EQ(a.instances_checked, 25u);
    EXPECT_EQ(a.instances_checked, b.instances_checked);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_TRUE(a.passed());
}

TEST(Campaign, ProductIncludesWorkedExamplePair) {
    Campaign c;
    c.suite = Suite::Product;
    c.seed = 3;
    c.count = 10;
    const auto r = run_campaign(c);
    EXPECT_TRUE(r.passed()) << describe(r);
    EXPECT_EQ(r.instances_checked + r.skipped.size(), 11u);
}

TEST(SuiteTokens, RoundTrip) {
    for (auto s : {Suite::Core, Suite::Distributive, Suite::PExtension, Suite::Product, Suite::Divisor}) {
        EXPECT_EQ(suite_from_string(to_string(s)), s);
    }
    EXPECT_EQ(to_string(Suite::Divisor), "thm8131");
    EXPECT_FALSE(suite_from_string("nope").has_value());
}
