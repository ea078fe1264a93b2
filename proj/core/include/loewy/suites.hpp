#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loewy/lattice.hpp"

namespace loewy {

/// One violated clause, with the elements needed to re-check it by hand.
struct Failure {
    std::string instance;
    std::string clause;
    std::vector<std::string> witness;

    friend bool operator==(const Failure&, const Failure&) = default;
};

/// An instance that was not checked, with the error code that excluded it
/// (E_TOO_LARGE for caps, E_PRECONDITION for suites that do not apply).
struct Skip {
    std::string instance;
    std::string reason;

    friend bool operator==(const Skip&, const Skip&) = default;
};

struct VerificationReport {
    std::string suite;
    std::size_t instances_checked = 0;
    std::vector<Failure> failures;
    std::vector<Skip> skipped;
    double elapsed_ms = 0.0;

    bool passed() const noexcept { return failures.empty(); }
    void absorb(const VerificationReport& other);
};

/// Socle against atoms and essentials, radical against the dual, the Loewy
/// recursion against materialized intervals, length bounds, the length-two
/// trichotomy and the layer cardinality identity.
VerificationReport verify_core_laws(const FiniteLattice& l, const Limits& limits = {});

/// Laws that hold in every distributive lattice. E_PRECONDITION otherwise.
VerificationReport verify_distributive_laws(const FiniteLattice& l, const Limits& limits = {});

/// Laws of lattices covered by their Loewy layers. E_PRECONDITION otherwise.
VerificationReport verify_p_extension_laws(const FiniteLattice& l, const Limits& limits = {});

/// Loewy series of a product against the factor series. E_TOO_LARGE.
VerificationReport verify_product_laws(const FiniteLattice& a, const FiniteLattice& b, const Limits& limits = {});

/// Closed forms for the divisor lattice of n = prod p_i^a_i (n >= 2), checked
/// against an independent factorization. E_RANGE.
VerificationReport verify_divisor_laws(std::uint64_t n, const Limits& limits = {});

enum class Suite { Core, Distributive, PExtension, Product, Divisor };

/// Command-line tokens: core, distributive, p-extension, product, thm8131.
std::string_view to_string(Suite suite) noexcept;
std::optional<Suite> suite_from_string(std::string_view token);

/**
 * Which instances a campaign runs.
 *
 * Divisor: n alone, else every n in [2, max_n] (max_n defaults to 1000).
 * Product: the chain(1) x chain(2) pair plus `count` pairs drawn from `seed`
 *   (defaults 50 and 0) among chains, cubes, divisor lattices and grids.
 * Others: divisor(n) if n is set, divisor(1..max_n) if max_n is set, `count`
 *   random_distributive instances with seeds seed, seed+1, ... if seed is
 *   set (count defaults to 100); the fixture corpus when none of these is set.
 */
struct Campaign {
    Suite suite = Suite::Core;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> max_n;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> count;
    std::size_t random_max_size = 64;
    /// Also run the core laws on every instance of a non-core campaign.
    bool with_core_laws = true;
    Limits limits;
};

VerificationReport run_campaign(const Campaign& campaign);

/// Named lattices used as the default campaign corpus.
std::vector<FiniteLattice> fixture_corpus();

} // namespace loewy
