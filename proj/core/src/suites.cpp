#include "loewy/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <thread>

#include "loewy/analysis.hpp"
#include "loewy/families.hpp"

namespace loewy {

namespace {

class Recorder {
public:
    Recorder(VerificationReport& report, const FiniteLattice& l) : report_(report), l_(l) {}

    void expect(bool ok, std::string_view clause, std::vector<Index> witness) {
        if (ok) return;
        report_.failures.push_back({l_.name(), std::string(clause), names(l_, witness)});
    }
    void expect_text(bool ok, std::string_view clause, std::vector<std::string> witness) {
        if (ok) return;
        report_.failures.push_back({l_.name(), std::string(clause), std::move(witness)});
    }

private:
    VerificationReport& report_;
    const FiniteLattice& l_;
};

VerificationReport single(std::string_view suite) {
    VerificationReport r;
    r.suite = std::string(suite);
    r.instances_checked = 1;
    return r;
}

std::vector<Index> to_vector(const ElementSet& s) { return s.members(); }

// Complemented within [low, high], using the parent's meet and join (an
// interval is a sublattice).
bool interval_complemented(const FiniteLattice& l, const std::vector<Index>& members, Index low, Index high) {
    for (Index x : members) {
        bool found = false;
        for (Index y : members) {
            if (l.meet(x, y) == low && l.join(x, y) == high) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

std::string as_text(std::size_t v) { return std::to_string(v); }

} // namespace

void VerificationReport::absorb(const VerificationReport& other) {
    instances_checked += other.instances_checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
}

VerificationReport verify_core_laws(const FiniteLattice& l, const Limits& limits) {
    VerificationReport report = single("core");
    Recorder check(report, l);

    const ElementSet atom_set = atoms(l);
    const Index s = socle(l);
    Index joined = l.bottom();
    for (Index a : atom_set) joined = l.join(joined, a);
    check.expect(s == joined, "socle-is-join-of-atoms", {s, joined});

    if (!l.degenerate()) {
        const ElementSet essentials = essential_elements(l);
        check.expect(essentials.contains(s), "socle-is-essential", {s});
        Index met = l.top();
        for (Index e : essentials) {
            met = l.meet(met, e);
            check.expect(l.leq(s, e), "socle-is-least-essential", {s, e});
        }
        check.expect(s == met, "socle-is-meet-of-essentials", {s, met});
    }

    const FiniteLattice reversed = dual(l);
    const Index r = radical(l);
    const std::string& dual_socle = reversed.element(socle(reversed));
    check.expect_text(l.element(r) == dual_socle, "radical-is-socle-of-dual", std::vector<std::string>{l.element(r), dual_socle});

    // Loewy recursion on materialized intervals [S_i, top].
    const LoewySeries series = loewy_series(l);
    std::vector<Index> recursion{l.bottom()};
    Index current = l.bottom();
    while (current != l.top() && recursion.size() <= l.size()) {
        const Interval upper = interval(l, current, l.top(), limits);
        Index local = upper.lattice.bottom();
        for (Index a : atoms(upper.lattice)) local = upper.lattice.join(local, a);
        current = upper.embedding[local];
        recursion.push_back(current);
    }
    check.expect(recursion == series.chain, "loewy-series-matches-interval-recursion", series.chain);

    const std::size_t loewy = series.length();
    const std::size_t length = lattice_length(l);
    check.expect_text(loewy <= length, "loewy-length-at-most-length", std::vector<std::string>{as_text(loewy), as_text(length)});
    check.expect_text(length + 1 <= l.size(), "length-below-cardinality",
                 std::vector<std::string>{as_text(length), as_text(l.size())});

    if (length == 2) {
        const bool chain_flag = is_chain(l);
        const bool three = l.size() == 3;
        const bool ok = chain_flag == three && three == (loewy == 2) && (chain_flag || loewy == 1);
        check.expect_text(ok, "length-two-trichotomy", std::vector<std::string>{as_text(l.size()), as_text(loewy)});
    }

    const auto sizes = layer_sizes(l, series);
    std::size_t sum = 0;
    for (auto v : sizes) sum += v;
    const std::size_t union_size = sum + 1 - series.length();
    const auto outside = p_extension_witness(l);
    check.expect_text(l.size() >= union_size, "cardinality-at-least-layer-union",
                 std::vector<std::string>{as_text(l.size()), as_text(union_size)});
    std::vector<Index> witness;
    if (outside) witness.push_back(*outside);
    check.expect((l.size() == union_size) == !outside.has_value(), "cardinality-identity-iff-p-extension", witness);
    return report;
}

VerificationReport verify_distributive_laws(const FiniteLattice& l, const Limits& limits) {
    if (!is_distributive(l, limits)) {
        throw LatticeError(ErrorCode::Precondition, "'" + l.name() + "' is not distributive");
    }
    VerificationReport report = single("distributive");
    Recorder check(report, l);

    check.expect(is_catenarian(l), "distributive-implies-catenarian", std::vector<Index>{});

    const LoewySeries series = loewy_series(l);
    const auto& s = series.chain;
    std::size_t layer_length_sum = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const auto members = interval_members(l, s[i], s[i + 1]);
        // Sublattices of a distributive lattice are distributive, so Boolean
        // reduces to complemented here.
        check.expect(interval_complemented(l, members, s[i], s[i + 1]), "layer-is-boolean", {s[i], s[i + 1]});
        layer_length_sum += lattice_length(interval(l, s[i], s[i + 1], limits).lattice);
    }
    const std::size_t length = lattice_length(l);
    check.expect_text(layer_length_sum == length, "length-is-sum-of-layer-lengths",
                 std::vector<std::string>{as_text(layer_length_sum), as_text(length)});

    const bool chain_flag = is_chain(l);
    check.expect_text((series.length() == length) == chain_flag, "loewy-equals-length-iff-chain",
                 std::vector<std::string>{as_text(series.length()), as_text(length)});
    if (!l.degenerate()) {
        const bool boolean = is_complemented(l);
        check.expect_text((series.length() == 1) == boolean, "loewy-one-iff-boolean",
                     std::vector<std::string>{as_text(series.length())});
    }

    const Index top_socle = socle(l);
    for (Index t = 0; t < l.size(); ++t) {
        const auto members = interval_members(l, l.bottom(), t);
        const bool boolean = interval_complemented(l, members, l.bottom(), t);
        check.expect(boolean == l.leq(t, top_socle), "socle-is-largest-boolean-initial-interval", {t, top_socle});
        const Index local = socle_between(l, l.bottom(), t);
        const Index expected = l.meet(top_socle, t);
        check.expect(local == expected, "initial-socle-is-meet-with-socle", {t, local, expected});
    }

    const std::size_t irreducibles = join_irreducibles(l).size();
    check.expect_text(length == irreducibles, "length-equals-join-irreducible-count",
                 std::vector<std::string>{as_text(length), as_text(irreducibles)});
    return report;
}

VerificationReport verify_p_extension_laws(const FiniteLattice& l, const Limits& limits) {
    if (const auto outside = p_extension_witness(l)) {
        throw LatticeError(ErrorCode::Precondition,
                           "'" + l.name() + "' is not covered by its Loewy layers (element " + l.element(*outside) + ")");
    }
    VerificationReport report = single("p-extension");
    Recorder check(report, l);

    const LoewySeries series = loewy_series(l);
    const auto& s = series.chain;
    const std::size_t n = series.length();

    const bool distributive = is_distributive(l, limits);
    bool layers_boolean = true;
    std::vector<Index> first_bad;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_boolean(interval(l, s[i], s[i + 1], limits).lattice, limits)) {
            layers_boolean = false;
            if (first_bad.empty()) first_bad = {s[i], s[i + 1]};
        }
    }
    check.expect(distributive == layers_boolean, "distributive-iff-layers-boolean", first_bad);
    if (!distributive) return report;

    std::vector<Index> layer_atoms;
    for (std::size_t i = 0; i < n; ++i) {
        for (Index c : l.upper_covers(s[i])) {
            if (l.leq(c, s[i + 1])) layer_atoms.push_back(c);
        }
    }
    const ElementSet from_layers(layer_atoms);
    const ElementSet irreducible = join_irreducibles(l);
    check.expect(from_layers == irreducible, "join-irreducibles-are-layer-atoms", to_vector(irreducible));

    if (n >= 1) {
        const Index r = radical(l);
        check.expect(r == s[n - 1], "radical-is-penultimate", {r, s[n - 1]});
        for (std::size_t i = 0; i < n; ++i) {
            const Index local = radical_between(l, s[i], s[i + 1]);
            check.expect(local == s[i], "layer-radical-is-layer-bottom", {s[i], s[i + 1], local});
        }
    }

    for (Index t = 0; t < l.size(); ++t) {
        if (t == l.top()) continue;
        std::size_t k = 0;
        while (k + 1 < s.size() && l.leq(s[k + 1], t)) ++k;
        std::vector<Index> below(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        if (t != s[k]) below.push_back(t);
        check.expect(loewy_series_between(l, l.bottom(), t).chain == below, "splice-below", {t});
        std::vector<Index> above{t};
        above.insert(above.end(), s.begin() + static_cast<std::ptrdiff_t>(k) + 1, s.end());
        check.expect(loewy_series_between(l, t, l.top()).chain == above, "splice-above", {t});
    }
    return report;
}

VerificationReport verify_product_laws(const FiniteLattice& a, const FiniteLattice& b, const Limits& limits) {
    const Product p = product_decomposed(a, b, limits);
    VerificationReport report = single("product");
    Recorder check(report, p.lattice);

    const auto first = loewy_series(a).chain;
    const auto second = loewy_series(b).chain;
    const auto series = loewy_series(p.lattice).chain;
    const std::size_t m = first.size() - 1;
    const std::size_t r = second.size() - 1;
    const std::size_t n = series.size() - 1;

    check.expect_text(n == std::max(m, r), "loewy-length-is-max",
                 std::vector<std::string>{as_text(n), as_text(m), as_text(r)});
    for (std::size_t i = 0; i <= std::max(m, r); ++i) {
        const Index expected = p.index_of(first[std::min(i, m)], second[std::min(i, r)]);
        const bool ok = i <= n && series[i] == expected;
        check.expect(ok, "series-is-componentwise", {expected});
    }
    for (std::size_t i = 0; i <= n; ++i) {
        const auto [x, y] = p.components[series[i]];
        if (i <= m) check.expect(x == first[i], "projection-reproduces-first-series", {series[i]});
        if (i <= r) check.expect(y == second[i], "projection-reproduces-second-series", {series[i]});
    }

    // Loewy index of each factor: first step whose projection reaches the factor's top.
    auto reach = [&](auto project, Index top) {
        std::size_t i = 0;
        while (i < n && project(p.components[series[i]]) != top) ++i;
        return i;
    };
    const std::size_t index_first = reach([](auto c) { return c.first; }, a.top());
    const std::size_t index_second = reach([](auto c) { return c.second; }, b.top());
    check.expect_text(index_first == m && index_second == r, "factor-loewy-index",
                 std::vector<std::string>{as_text(index_first), as_text(index_second)});

    std::vector<Index> expected_atoms;
    for (Index x : atoms(a)) expected_atoms.push_back(p.index_of(x, b.bottom()));
    for (Index y : atoms(b)) expected_atoms.push_back(p.index_of(a.bottom(), y));
    const ElementSet product_atoms = atoms(p.lattice);
    check.expect(product_atoms == ElementSet(expected_atoms), "atoms-live-in-single-factors", to_vector(product_atoms));
    return report;
}

VerificationReport verify_divisor_laws(std::uint64_t n, const Limits& limits) {
    if (n < 2) throw LatticeError(ErrorCode::Range, "divisor laws need n >= 2");
    const FiniteLattice l = divisor_lattice(n, limits);
    VerificationReport report = single("thm8131");
    Recorder check(report, l);

    const auto factors = factorize(n);
    auto value = [&l](Index x) { return std::stoull(l.element(x)); };
    auto values = [&](const ElementSet& set) {
        std::vector<std::uint64_t> out;
        for (Index x : set) out.push_back(value(x));
        std::sort(out.begin(), out.end());
        return out;
    };
    unsigned max_exponent = 0;
    std::uint64_t radical_of_n = 1;
    std::size_t exponent_sum = 0;
    std::size_t divisor_count = 1;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> prime_powers;
    for (const auto& [p, e] : factors) {
        max_exponent = std::max(max_exponent, e);
        radical_of_n *= p;
        exponent_sum += e;
        divisor_count *= e + 1;
        primes.push_back(p);
        for (unsigned b = 1; b <= e; ++b) prime_powers.push_back(ipow(p, b));
    }
    std::sort(prime_powers.begin(), prime_powers.end());

    const ElementSet atom_set = atoms(l);
    check.expect(values(atom_set) == primes, "atoms-are-prime-divisors", to_vector(atom_set));
    const Index s1 = socle(l);
    check.expect(value(s1) == radical_of_n, "socle-is-product-of-primes", {s1});

    const LoewySeries series = loewy_series(l);
    check.expect(series.length() == max_exponent, "loewy-length-is-max-exponent", series.chain);
    for (std::size_t j = 0; j < series.chain.size(); ++j) {
        std::uint64_t expected = 1;
        for (const auto& [p, e] : factors) expected *= ipow(p, std::min<unsigned>(static_cast<unsigned>(j), e));
        const Index sj = series.chain[j];
        check.expect_text(value(sj) == expected, "series-closed-form",
                     std::vector<std::string>{l.element(sj), std::to_string(expected)});

        if (j + 1 == series.chain.size()) break;
        const Index next = series.chain[j + 1];
        std::vector<std::uint64_t> predicted;
        for (const auto& [p, e] : factors) {
            if (value(sj) % ipow(p, e) != 0) predicted.push_back(value(sj) * p);
        }
        std::sort(predicted.begin(), predicted.end());
        std::vector<Index> layer_atoms;
        for (Index c : l.upper_covers(sj)) {
            if (l.leq(c, next)) layer_atoms.push_back(c);
        }
        check.expect(values(ElementSet(layer_atoms)) == predicted, "layer-atoms-closed-form", layer_atoms);
        check.expect(is_boolean(interval(l, sj, next, limits).lattice, limits), "layer-is-boolean", {sj, next});
    }

    const ElementSet irreducible = join_irreducibles(l);
    check.expect(values(irreducible) == prime_powers, "join-irreducibles-are-prime-powers", to_vector(irreducible));

    const std::size_t length = lattice_length(l);
    std::size_t layer_atom_total = 0;
    for (std::size_t j = 0; j + 1 < series.chain.size(); ++j) {
        for (Index c : l.upper_covers(series.chain[j])) layer_atom_total += l.leq(c, series.chain[j + 1]);
    }
    check.expect_text(l.size() == divisor_count, "cardinality-is-divisor-count",
                 std::vector<std::string>{as_text(l.size()), as_text(divisor_count)});
    check.expect_text(length == exponent_sum && length == irreducible.size() && length == layer_atom_total,
                 "length-is-exponent-sum",
                 std::vector<std::string>{as_text(length), as_text(exponent_sum), as_text(irreducible.size()),
                                          as_text(layer_atom_total)});

    const bool p_flag = is_p_extension(l);
    const bool closed_form = factors.size() == 1 || max_exponent == 1;
    const bool shape = is_chain(l) || is_boolean(l, limits);
    std::vector<Index> witness;
    if (auto outside = p_extension_witness(l)) witness.push_back(*outside);
    check.expect(p_flag == closed_form && closed_form == shape, "p-extension-iff-prime-power-or-squarefree", witness);
    return report;
}

std::string_view to_string(Suite suite) noexcept {
    switch (suite) {
    case Suite::Core: return "core";
    case Suite::Distributive: return "distributive";
    case Suite::PExtension: return "p-extension";
    case Suite::Product: return "product";
    case Suite::Divisor: return "thm8131";
    }
    return "unknown";
}

std::optional<Suite> suite_from_string(std::string_view token) {
    for (auto s : {Suite::Core, Suite::Distributive, Suite::PExtension, Suite::Product, Suite::Divisor}) {
        if (to_string(s) == token) return s;
    }
    return std::nullopt;
}

std::vector<FiniteLattice> fixture_corpus() {
    std::vector<FiniteLattice> out;
    for (std::size_t n = 0; n <= 5; ++n) out.push_back(chain(n));
    for (std::size_t k = 0; k <= 4; ++k) out.push_back(boolean_cube(k));
    for (std::uint64_t n : {1, 2, 4, 6, 8, 12, 30, 36, 60, 72, 210, 360, 1024}) out.push_back(divisor_lattice(n));
    for (const auto& dims : std::vector<std::vector<std::size_t>>{{1, 2}, {2, 3}, {1, 1, 1}, {3, 3}, {1, 2, 3}}) {
        out.push_back(grid(dims));
    }
    for (std::size_t k = 3; k <= 5; ++k) out.push_back(diamond(k));
    out.push_back(pentagon());
    for (std::uint64_t n : {12, 30, 36}) out.push_back(subgroup_lattice_cyclic(n));
    for (unsigned q = 2; q <= 5; ++q) {
        for (unsigned d = 1; d <= 2; ++d) out.push_back(subspace_lattice(q, d));
    }
    for (const auto& name : paper_example_names()) out.push_back(paper_example(name));
    out.push_back(product(chain(1), chain(2)));
    out.push_back(product(divisor_lattice(4), divisor_lattice(9)));
    out.push_back(product(diamond(3), chain(1)));
    return out;
}

namespace {

using Task = std::function<VerificationReport()>;

FiniteLattice random_factor(std::mt19937_64& rng) {
    switch (rng() % 4) {
    case 0: return chain(1 + rng() % 8);
    case 1: return boolean_cube(1 + rng() % 4);
    case 2: return divisor_lattice(2 + rng() % 499);
    default: {
        std::vector<std::size_t> dims{1 + rng() % 3, 1 + rng() % 3};
        if (rng() % 2) dims.push_back(1 + rng() % 2);
        return grid(dims);
    }
    }
}

VerificationReport guarded(const std::string& suite, const std::string& instance, const Task& task) {
    try {
        return task();
    } catch (const LatticeError& e) {
        if (e.code() != ErrorCode::TooLarge && e.code() != ErrorCode::Precondition) throw;
        VerificationReport r;
        r.suite = suite;
        r.skipped.push_back({instance, std::string(to_string(e.code()))});
        return r;
    }
}

std::vector<VerificationReport> run_parallel(const std::vector<Task>& tasks) {
    std::vector<VerificationReport> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size() && !failed; i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (error) std::rethrow_exception(error);
    return results;
}

} // namespace

VerificationReport run_campaign(const Campaign& c) {
    const auto started = std::chrono::steady_clock::now();
    const std::string suite(to_string(c.suite));
    const Limits limits = c.limits;
    std::vector<Task> tasks;

    auto add_lattice_task = [&](std::function<FiniteLattice()> make, std::string descriptor) {
        tasks.push_back([=, make = std::move(make)] {
            return guarded(suite, descriptor, [&] {
                const FiniteLattice l = make();
                VerificationReport r;
                switch (c.suite) {
                case Suite::Core: r = verify_core_laws(l, limits); break;
                case Suite::Distributive: r = verify_distributive_laws(l, limits); break;
                case Suite::PExtension: r = verify_p_extension_laws(l, limits); break;
                default: break;
                }
                if (c.with_core_laws && c.suite != Suite::Core) {
                    VerificationReport core = verify_core_laws(l, limits);
                    r.failures.insert(r.failures.end(), core.failures.begin(), core.failures.end());
                }
                return r;
            });
        });
    };

    switch (c.suite) {
    case Suite::Divisor: {
        std::uint64_t lo = 2;
        std::uint64_t hi = c.max_n.value_or(1000);
        if (c.n) lo = hi = *c.n;
        if (lo < 2 || hi < lo) throw LatticeError(ErrorCode::Range, "divisor campaign needs 2 <= n");
        for (std::uint64_t n = lo; n <= hi; ++n) {
            tasks.push_back([=] {
                return guarded(suite, "divisor(" + std::to_string(n) + ")", [&] {
                    VerificationReport r = verify_divisor_laws(n, limits);
                    if (c.with_core_laws) {
                        VerificationReport core = verify_core_laws(divisor_lattice(n, limits), limits);
                        r.failures.insert(r.failures.end(), core.failures.begin(), core.failures.end());
                    }
                    return r;
                });
            });
        }
        break;
    }
    case Suite::Product: {
        std::vector<std::pair<FiniteLattice, FiniteLattice>> pairs;
        pairs.emplace_back(chain(1, limits), chain(2, limits));
        std::mt19937_64 rng(c.seed.value_or(0));
        const std::size_t count = c.count.value_or(50);
        while (pairs.size() < count + 1) {
            FiniteLattice a = random_factor(rng);
            FiniteLattice b = random_factor(rng);
            if (a.size() * b.size() > limits.max_elements) continue;
            pairs.emplace_back(std::move(a), std::move(b));
        }
        for (auto& pair : pairs) {
            const std::string descriptor = "product(" + pair.first.name() + "," + pair.second.name() + ")";
            auto shared = std::make_shared<const std::pair<FiniteLattice, FiniteLattice>>(std::move(pair));
            tasks.push_back([=] {
                return guarded(suite, descriptor,
                               [&] { return verify_product_laws(shared->first, shared->second, limits); });
            });
        }
        break;
    }
    default: {
        const bool explicit_instances = c.n || c.max_n || c.seed;
        if (c.n) {
            const auto n = *c.n;
            add_lattice_task([=] { return divisor_lattice(n, limits); }, "divisor(" + std::to_string(n) + ")");
        }
        if (c.max_n) {
            if (*c.max_n < 1) throw LatticeError(ErrorCode::Range, "max-n must be >= 1");
            for (std::uint64_t n = 1; n <= *c.max_n; ++n) {
                add_lattice_task([=] { return divisor_lattice(n, limits); }, "divisor(" + std::to_string(n) + ")");
            }
        }
        if (c.seed) {
            const std::size_t count = c.count.value_or(100);
            for (std::size_t i = 0; i < count; ++i) {
                const std::uint64_t seed = *c.seed + i;
                const std::size_t max_size = c.random_max_size;
                add_lattice_task([=] { return random_distributive(seed, max_size, limits); },
                                 "random_distributive(" + std::to_string(seed) + "," + std::to_string(max_size) + ")");
            }
        }
        if (!explicit_instances) {
            for (auto& l : fixture_corpus()) {
                auto shared = std::make_shared<const FiniteLattice>(std::move(l));
                add_lattice_task([shared] { return *shared; }, shared->name());
            }
        }
        break;
    }
    }

    VerificationReport total;
    total.suite = suite;
    for (const auto& partial : run_parallel(tasks)) total.absorb(partial);
    std::stable_sort(total.failures.begin(), total.failures.end(),
                     [](const Failure& a, const Failure& b) { return a.instance < b.instance; });
    std::stable_sort(total.skipped.begin(), total.skipped.end(),
                     [](const Skip& a, const Skip& b) { return a.instance < b.instance; });
    total.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return total;
}

} // namespace loewy
