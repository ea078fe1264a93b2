#include "loewy/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <random>
#include <set>

namespace loewy {

namespace {

using CoverNames = std::vector<std::pair<std::string, std::string>>;

LatticeError range_error(const std::string& detail) { return LatticeError(ErrorCode::Range, detail); }

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> low;
    std::vector<std::uint64_t> high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::string coordinates(const std::vector<std::size_t>& coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords[i]);
    }
    return out + ")";
}

// Multiplication in GF(q) for q in {2, 3, 4, 5}; GF(4) = {0, 1, a, a+1} encoded 0..3 with a^2 = a + 1.
struct SmallField {
    unsigned q;

    unsigned mul(unsigned x, unsigned y) const {
        if (q != 4) return (x * y) % q;
        static constexpr std::array<std::array<unsigned, 4>, 4> table{{
            {0, 0, 0, 0},
            {0, 1, 2, 3},
            {0, 2, 3, 1},
            {0, 3, 1, 2},
        }};
        return table[x][y];
    }
};

/// Uniform-enough bounded draw taken directly from the engine output.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

} // namespace

FiniteLattice chain(std::size_t n, const Limits& limits) {
    std::vector<std::string> ids;
    CoverNames covers;
    for (std::size_t i = 0; i <= n; ++i) {
        ids.push_back(std::to_string(i));
        if (i) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return build_from_covers("chain(" + std::to_string(n) + ")", std::move(ids), covers, limits);
}

FiniteLattice boolean_cube(std::size_t k, const Limits& limits) {
    if (k > 16) throw range_error("boolean_cube needs 0 <= k <= 16, got " + std::to_string(k));
    const std::size_t n = std::size_t{1} << k;
    if (n > limits.max_elements) {
        throw LatticeError(ErrorCode::TooLarge, "boolean_cube(" + std::to_string(k) + ") exceeds size cap");
    }
    auto subset_name = [k](std::size_t mask) {
        std::string out = "{";
        bool first = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1u)) continue;
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        return out + "}";
    };
    std::vector<std::string> ids;
    CoverNames covers;
    for (std::size_t mask = 0; mask < n; ++mask) {
        ids.push_back(subset_name(mask));
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1u)) covers.emplace_back(subset_name(mask), subset_name(mask | (std::size_t{1} << i)));
        }
    }
    return build_from_covers("boolean_cube(" + std::to_string(k) + ")", std::move(ids), covers, limits);
}

FiniteLattice divisor_lattice(std::uint64_t n, const Limits& limits) {
    if (n < 1 || n > 1'000'000'000) throw range_error("divisor_lattice needs 1 <= n <= 10^9, got " + std::to_string(n));
    const auto divs = divisors_of(n);
    if (divs.size() > limits.max_divisors) {
        throw range_error(std::to_string(n) + " has " + std::to_string(divs.size()) + " divisors, cap is " +
                          std::to_string(limits.max_divisors));
    }
    std::vector<std::string> ids;
    CoverNames covers;
    for (std::uint64_t d : divs) {
        ids.push_back(std::to_string(d));
        for (std::uint64_t e : divs) {
            if (e > d && e % d == 0 && is_prime(e / d)) covers.emplace_back(std::to_string(d), std::to_string(e));
        }
    }
    return build_from_covers("divisor(" + std::to_string(n) + ")", std::move(ids), covers, limits);
}

FiniteLattice grid(const std::vector<std::size_t>& dims, const Limits& limits) {
    if (dims.empty()) throw range_error("grid needs at least one dimension");
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d < 1) throw range_error("grid dimensions must be >= 1");
        if (total > limits.max_elements / (d + 1)) throw range_error("grid exceeds size cap");
        total *= d + 1;
    }
    if (total > limits.max_elements) throw range_error("grid exceeds size cap");

    auto id = [&dims](const std::vector<std::size_t>& c) {
        return dims.size() == 1 ? std::to_string(c[0]) : coordinates(c);
    };
    std::vector<std::string> ids;
    CoverNames covers;
    std::vector<std::size_t> c(dims.size(), 0);
    for (std::size_t k = 0; k < total; ++k) {
        ids.push_back(id(c));
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (c[i] == dims[i]) continue;
            auto next = c;
            ++next[i];
            covers.emplace_back(ids.back(), id(next));
        }
        for (std::size_t i = dims.size(); i-- > 0;) {
            if (++c[i] <= dims[i]) break;
            c[i] = 0;
        }
    }
    std::vector<std::size_t> shape(dims.begin(), dims.end());
    return build_from_covers("grid" + coordinates(shape), std::move(ids), covers, limits);
}

FiniteLattice diamond(std::size_t k) {
    if (k < 3 || k > 4000) throw range_error("diamond needs 3 <= k <= 4000, got " + std::to_string(k));
    std::vector<std::string> ids{"0", "1"};
    CoverNames covers;
    for (std::size_t i = 1; i <= k; ++i) {
        ids.push_back("a" + std::to_string(i));
        covers.emplace_back("0", ids.back());
        covers.emplace_back(ids.back(), "1");
    }
    return build_from_covers("diamond(" + std::to_string(k) + ")", std::move(ids), covers);
}

FiniteLattice pentagon() {
    return build_from_covers("pentagon", {"0", "a", "b", "c", "1"},
                             {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

FiniteLattice subgroup_lattice_cyclic(std::uint64_t n, const Limits& limits) {
    if (n < 1 || n > 4096) throw range_error("subgroup_lattice_cyclic needs 1 <= n <= 4096, got " + std::to_string(n));

    // Every subgroup of a cyclic group is cyclic, so the subgroups are the <g>.
    std::set<std::vector<bool>> found;
    for (std::uint64_t g = 0; g < n; ++g) {
        std::vector<bool> members(n, false);
        std::uint64_t x = 0;
        do {
            members[x] = true;
            x = (x + g) % n;
        } while (x != 0);
        found.insert(std::move(members));
        if (found.size() > limits.max_divisors) throw range_error("subgroup count exceeds cap");
    }

    std::vector<std::vector<bool>> groups(found.begin(), found.end());
    std::vector<std::string> ids;
    for (const auto& h : groups) {
        const auto size = static_cast<std::uint64_t>(std::count(h.begin(), h.end(), true));
        ids.push_back(std::to_string(n / size));
    }
    std::vector<std::vector<bool>> inside(groups.size(), std::vector<bool>(groups.size(), true));
    for (std::size_t a = 0; a < groups.size(); ++a) {
        for (std::size_t b = 0; b < groups.size(); ++b) {
            for (std::uint64_t x = 0; x < n && inside[a][b]; ++x) {
                if (groups[a][x] && !groups[b][x]) inside[a][b] = false;
            }
        }
    }
    auto subset = [&inside](std::size_t a, std::size_t b) { return inside[a][b]; };
    return build_from_order("subgroup_cyclic(" + std::to_string(n) + ")", std::move(ids), subset, limits);
}

FiniteLattice subspace_lattice(unsigned q, unsigned d) {
    if (q < 2 || q > 5 || (d != 1 && d != 2)) {
        throw range_error("subspace_lattice needs q in {2,3,4,5} and d in {1,2}");
    }
    const SmallField field{q};
    const unsigned vectors = d == 1 ? q : q * q;
    auto coords = [q](unsigned v) { return std::array<unsigned, 2>{v % q, v / q}; };
    auto encode = [q](std::array<unsigned, 2> c) { return c[0] + q * c[1]; };

    std::set<std::vector<bool>> found;
    std::vector<bool> zero(vectors, false);
    zero[0] = true;
    found.insert(zero);
    found.insert(std::vector<bool>(vectors, true));
    std::map<std::vector<bool>, std::string> label{{zero, "0"}, {std::vector<bool>(vectors, true), "V"}};
    if (d == 2) {
        for (unsigned v = 1; v < vectors; ++v) {
            std::vector<bool> line(vectors, false);
            const auto c = coords(v);
            for (unsigned s = 0; s < q; ++s) line[encode({field.mul(s, c[0]), field.mul(s, c[1])})] = true;
            if (!found.insert(line).second) continue;
            // Name the line by its generator whose first nonzero coordinate is 1.
            for (unsigned w = 1; w < vectors; ++w) {
                const auto cw = coords(w);
                if (line[w] && (cw[0] == 1 || (cw[0] == 0 && cw[1] == 1))) {
                    label[line] = "<" + std::to_string(cw[0]) + "," + std::to_string(cw[1]) + ">";
                    break;
                }
            }
        }
    }
    std::vector<std::vector<bool>> spaces(found.begin(), found.end());
    std::vector<std::string> ids;
    for (const auto& s : spaces) ids.push_back(label.at(s));
    auto subset = [&spaces, vectors](std::size_t a, std::size_t b) {
        for (unsigned x = 0; x < vectors; ++x) {
            if (spaces[a][x] && !spaces[b][x]) return false;
        }
        return true;
    };
    return build_from_order("subspace(" + std::to_string(q) + "," + std::to_string(d) + ")", std::move(ids), subset);
}

const std::vector<std::string>& paper_example_names() {
    static const std::vector<std::string> names{"ex8_41", "ex8_7_1", "ex8_7_3", "ex8_81"};
    return names;
}

FiniteLattice paper_example(std::string_view name) {
    if (name == "ex8_41") {
        return build_from_covers("ex8_41", {"k", "k1", "k2", "k3", "L"},
                                 {{"k", "k1"}, {"k", "k2"}, {"k", "k3"}, {"k1", "L"}, {"k2", "L"}, {"k3", "L"}});
    }
    if (name == "ex8_7_1") {
        return build_from_covers(
            "ex8_7_1", {"k", "L2", "L3", "L4", "L6", "L"},
            {{"k", "L2"}, {"k", "L3"}, {"L2", "L4"}, {"L2", "L6"}, {"L3", "L6"}, {"L4", "L"}, {"L6", "L"}});
    }
    if (name == "ex8_7_3") {
        return build_from_covers("ex8_7_3", {"R", "T", "T1", "T2", "S"},
                                 {{"R", "T"}, {"T", "T1"}, {"T", "T2"}, {"T1", "S"}, {"T2", "S"}});
    }
    if (name == "ex8_81") {
        return build_from_covers("ex8_81", {"R", "R1", "R2", "R1R2", "R3", "S"},
                                 {{"R", "R1"},
                                  {"R", "R2"},
                                  {"R1", "R1R2"},
                                  {"R2", "R1R2"},
                                  {"R2", "R3"},
                                  {"R1R2", "S"},
                                  {"R3", "S"}});
    }
    throw LatticeError(ErrorCode::UnknownName, "no worked example named '" + std::string(name) + "'");
}

FiniteLattice random_distributive(std::uint64_t seed, std::size_t max_size, const Limits& limits) {
    if (max_size < 2) throw range_error("random_distributive needs max_size >= 2");
    std::mt19937_64 rng(seed);
    const std::uint64_t kind = draw(rng, 4);

    FiniteLattice base = [&] {
        if (kind % 2 == 0) {
            const std::size_t count = 1 + draw(rng, 4);
            std::vector<std::size_t> dims;
            std::size_t size = 1;
            for (std::size_t i = 0; i < count; ++i) {
                std::size_t d = 1 + draw(rng, 4);
                d = std::min(d, max_size / size - 1);
                if (d < 1) break;
                dims.push_back(d);
                size *= d + 1;
            }
            return grid(dims, limits);
        }
        std::uint64_t n = 2;
        for (int attempt = 0; attempt < 64; ++attempt) {
            const std::uint64_t candidate = 2 + draw(rng, 9999);
            if (divisors_of(candidate).size() <= max_size) {
                n = candidate;
                break;
            }
        }
        return divisor_lattice(n, limits);
    }();

    std::string label = "random_distributive(" + std::to_string(seed) + "," + std::to_string(max_size) + ")";
    if (kind < 2) return std::move(base).renamed(std::move(label));

    const Index low = static_cast<Index>(draw(rng, base.size() - 1));
    std::vector<Index> above;
    for (Index x = low + 1; x < base.size(); ++x) {
        if (base.leq(low, x)) above.push_back(x);
    }
    const Index high = above[draw(rng, above.size())];
    return interval(base, low, high, limits).lattice.renamed(std::move(label));
}

std::string_view to_string(FamilyKind kind) noexcept {
    switch (kind) {
    case FamilyKind::Chain: return "chain";
    case FamilyKind::BooleanCube: return "boolean_cube";
    case FamilyKind::Divisor: return "divisor";
    case FamilyKind::Grid: return "grid";
    case FamilyKind::Diamond: return "diamond";
    case FamilyKind::Pentagon: return "pentagon";
    case FamilyKind::SubgroupCyclic: return "subgroup_cyclic";
    case FamilyKind::Subspace: return "subspace";
    case FamilyKind::PaperExample: return "paper_example";
    case FamilyKind::RandomDistributive: return "random_distributive";
    }
    return "unknown";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view token) {
    for (auto kind : {FamilyKind::Chain, FamilyKind::BooleanCube, FamilyKind::Divisor, FamilyKind::Grid,
                      FamilyKind::Diamond, FamilyKind::Pentagon, FamilyKind::SubgroupCyclic, FamilyKind::Subspace,
                      FamilyKind::PaperExample, FamilyKind::RandomDistributive}) {
        if (to_string(kind) == token) return kind;
    }
    return std::nullopt;
}

FamilySpec FamilySpec::parse(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw range_error("missing family name");
    const auto kind = family_kind_from_string(tokens[0]);
    if (!kind) throw LatticeError(ErrorCode::UnknownName, "unknown family '" + tokens[0] + "'");

    FamilySpec spec;
    spec.kind = *kind;
    const std::size_t given = tokens.size() - 1;
    auto expect = [&](std::size_t lo, std::size_t hi) {
        if (given < lo || given > hi) {
            throw range_error(std::string(to_string(spec.kind)) + " takes " + std::to_string(lo) +
                              (lo == hi ? "" : ".." + (hi == SIZE_MAX ? std::string("n") : std::to_string(hi))) +
                              " parameters, got " + std::to_string(given));
        }
    };

    if (spec.kind == FamilyKind::PaperExample) {
        expect(1, 1);
        spec.example = tokens[1];
        return spec;
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::uint64_t value = 0;
        const auto& t = tokens[i];
        auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (ec != std::errc{} || end != t.data() + t.size()) throw range_error("'" + t + "' is not an unsigned integer");
        spec.parameters.push_back(value);
    }
    switch (spec.kind) {
    case FamilyKind::Pentagon: expect(0, 0); break;
    case FamilyKind::Grid: expect(1, SIZE_MAX); break;
    case FamilyKind::Subspace: expect(2, 2); break;
    case FamilyKind::RandomDistributive:
        expect(2, 2);
        spec.seed = spec.parameters.front();
        spec.parameters.erase(spec.parameters.begin());
        break;
    default: expect(1, 1); break;
    }
    return spec;
}

FiniteLattice generate(const FamilySpec& spec, const Limits& limits) {
    const auto& p = spec.parameters;
    auto param = [&p](std::size_t i) {
        if (i >= p.size()) throw range_error("missing family parameter");
        return p[i];
    };
    switch (spec.kind) {
    case FamilyKind::Chain: return chain(param(0), limits);
    case FamilyKind::BooleanCube: return boolean_cube(param(0), limits);
    case FamilyKind::Divisor: return divisor_lattice(param(0), limits);
    case FamilyKind::Grid: return grid(std::vector<std::size_t>(p.begin(), p.end()), limits);
    case FamilyKind::Diamond: return diamond(param(0));
    case FamilyKind::Pentagon: return pentagon();
    case FamilyKind::SubgroupCyclic: return subgroup_lattice_cyclic(param(0), limits);
    case FamilyKind::Subspace: return subspace_lattice(static_cast<unsigned>(param(0)), static_cast<unsigned>(param(1)));
    case FamilyKind::PaperExample: return paper_example(spec.example);
    case FamilyKind::RandomDistributive:
        if (!spec.seed) throw range_error("random_distributive needs a seed");
        return random_distributive(*spec.seed, param(0), limits);
    }
    throw range_error("unknown family");
}

} // namespace loewy
