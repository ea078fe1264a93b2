#include "loewy/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace loewy {

namespace {

using nlohmann::json;

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

LatticeError syntax(std::size_t line, const std::string& expected) {
    return LatticeError(ErrorCode::Syntax, "line " + std::to_string(line) + ": expected " + expected);
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string dot_quote(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

json name_list(const FiniteLattice& l, const std::vector<Index>& xs) { return json(names(l, xs)); }

json flag(const std::optional<bool>& value) { return value ? json(*value) : json("skipped"); }

std::string set_text(const FiniteLattice& l, const std::vector<Index>& xs, const char* open = "{",
                     const char* close = "}") {
    std::string out = open;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += l.element(xs[i]);
    }
    return out + close;
}

std::string flag_text(const std::optional<bool>& value) {
    return value ? (*value ? "true" : "false") : "skipped";
}

} // namespace

FiniteLattice parse_lattice(std::string_view text, const Limits& limits) {
    enum class State { Header, Body, Done } state = State::Header;
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            if (eol == text.size()) break;
            continue;
        }
        const std::string& keyword = tokens.front();
        switch (state) {
        case State::Header:
            if (keyword != "lattice" || tokens.size() != 2) throw syntax(line_no, "'lattice <name>'");
            name = tokens[1];
            state = State::Body;
            break;
        case State::Body:
            if (keyword == "elem") {
                if (tokens.size() != 2) throw syntax(line_no, "'elem <id>'");
                elements.push_back(tokens[1]);
            } else if (keyword == "cover") {
                if (tokens.size() != 3) throw syntax(line_no, "'cover <lower> <upper>'");
                covers.emplace_back(tokens[1], tokens[2]);
            } else if (keyword == "end") {
                if (tokens.size() != 1) throw syntax(line_no, "'end' alone on its line");
                state = State::Done;
            } else {
                throw syntax(line_no, "'elem', 'cover' or 'end'");
            }
            break;
        case State::Done: throw syntax(line_no, "end of input after 'end'");
        }
        if (eol == text.size()) break;
    }
    if (state == State::Header) throw syntax(line_no, "'lattice <name>'");
    if (state == State::Body) throw syntax(line_no, "'end'");
    if (elements.empty()) throw syntax(line_no, "at least one 'elem' line");
    return build_from_covers(std::move(name), std::move(elements), covers, limits);
}

std::string write_lattice(const FiniteLattice& l) {
    std::string out = "lattice " + l.name() + "\n";
    for (const auto& id : l.elements()) out += "elem " + id + "\n";
    for (const auto& [lo, hi] : l.covers()) out += "cover " + l.element(lo) + " " + l.element(hi) + "\n";
    out += "end\n";
    return out;
}

std::string export_dot(const FiniteLattice& l, bool with_loewy) {
    const auto h = heights(l);
    std::vector<Index> series;
    if (with_loewy) series = loewy_series(l).chain;
    auto in_series = [&series](Index x) { return std::find(series.begin(), series.end(), x) != series.end(); };
    auto series_step = [&series](Index a, Index b) {
        for (std::size_t i = 0; i + 1 < series.size(); ++i) {
            if (series[i] == a && series[i + 1] == b) return true;
        }
        return false;
    };

    std::ostringstream dot;
    dot << "digraph " << dot_quote(l.name()) << " {\n";
    dot << "  rankdir=BT;\n";
    dot << "  node [shape=ellipse];\n";
    for (Index x = 0; x < l.size(); ++x) {
        dot << "  n" << x << " [label=\"" << dot_escape(l.element(x)) << "\\nh=" << h[x] << "\"";
        if (with_loewy && in_series(x)) dot << ", peripheries=2";
        dot << "];\n";
    }
    for (std::size_t level = 0; level <= h[l.top()]; ++level) {
        dot << "  { rank=same;";
        for (Index x = 0; x < l.size(); ++x) {
            if (h[x] == level) dot << " n" << x << ";";
        }
        dot << " }\n";
    }
    for (const auto& [lo, hi] : l.covers()) {
        dot << "  n" << lo << " -> n" << hi;
        if (with_loewy && series_step(lo, hi)) dot << " [color=red, penwidth=2]";
        dot << ";\n";
    }
    if (with_loewy) {
        // Series steps that are not covers get their own highlighted edge.
        for (std::size_t i = 0; i + 1 < series.size(); ++i) {
            const auto& up = l.upper_covers(series[i]);
            if (std::find(up.begin(), up.end(), series[i + 1]) != up.end()) continue;
            dot << "  n" << series[i] << " -> n" << series[i + 1]
                << " [color=red, penwidth=2, style=dashed, constraint=false];\n";
        }
    }
    dot << "}\n";
    return dot.str();
}

std::string analysis_to_json(const FiniteLattice& l, const AnalysisReport& r) {
    json j;
    j["name"] = l.name();
    j["cardinality"] = r.cardinality;
    j["atoms"] = name_list(l, r.atoms.members());
    j["coatoms"] = name_list(l, r.coatoms.members());
    j["essentials"] = r.essentials ? name_list(l, r.essentials->members()) : json(nullptr);
    j["socle"] = l.element(r.socle);
    j["radical"] = l.element(r.radical);
    j["loewy_series"] = name_list(l, r.loewy.chain);
    j["loewy_length"] = r.loewy_length();
    j["lattice_length"] = r.lattice_length;
    j["join_irreducibles"] = name_list(l, r.join_irreducibles.members());
    j["meet_irreducibles"] = name_list(l, r.meet_irreducibles.members());
    j["layer_sizes"] = r.layer_sizes;
    j["flags"] = {
        {"is_chain", r.flags.is_chain},
        {"is_distributive", flag(r.flags.is_distributive)},
        {"is_modular", flag(r.flags.is_modular)},
        {"is_boolean", flag(r.flags.is_boolean)},
        {"is_catenarian", r.flags.is_catenarian},
        {"is_p_extension", r.flags.is_p_extension},
    };
    return j.dump(2) + "\n";
}

std::string analysis_to_text(const FiniteLattice& l, const AnalysisReport& r) {
    std::ostringstream out;
    out << "lattice:            " << l.name() << "\n";
    out << "cardinality:        " << r.cardinality << "\n";
    out << "atoms:              " << set_text(l, r.atoms.members()) << "\n";
    out << "coatoms:            " << set_text(l, r.coatoms.members()) << "\n";
    out << "essentials:         " << (r.essentials ? set_text(l, r.essentials->members()) : "undefined") << "\n";
    out << "socle:              " << l.element(r.socle) << "\n";
    out << "radical:            " << l.element(r.radical) << "\n";
    out << "loewy series:       " << set_text(l, r.loewy.chain, "[", "]") << "\n";
    out << "loewy length:       " << r.loewy_length() << "\n";
    out << "lattice length:     " << r.lattice_length << "\n";
    out << "join irreducibles:  " << set_text(l, r.join_irreducibles.members()) << "\n";
    out << "meet irreducibles:  " << set_text(l, r.meet_irreducibles.members()) << "\n";
    out << "layer sizes:        [";
    for (std::size_t i = 0; i < r.layer_sizes.size(); ++i) out << (i ? ", " : "") << r.layer_sizes[i];
    out << "]\n";
    out << "chain:              " << (r.flags.is_chain ? "true" : "false") << "\n";
    out << "distributive:       " << flag_text(r.flags.is_distributive) << "\n";
    out << "modular:            " << flag_text(r.flags.is_modular) << "\n";
    out << "boolean:            " << flag_text(r.flags.is_boolean) << "\n";
    out << "catenarian:         " << (r.flags.is_catenarian ? "true" : "false") << "\n";
    out << "p-extension:        " << (r.flags.is_p_extension ? "true" : "false") << "\n";
    return out.str();
}

std::string report_to_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"instance", f.instance}, {"clause", f.clause}, {"witness", f.witness}});
    }
    json skipped = json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"instance", s.instance}, {"reason", s.reason}});
    json j{
        {"suite", r.suite},
        {"instances_checked", r.instances_checked},
        {"failures", failures},
        {"skipped", skipped},
        {"elapsed_ms", r.elapsed_ms},
        {"verdict", r.passed() ? "pass" : "fail"},
    };
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.instances_checked << " checked, "
        << r.skipped.size() << " skipped, " << r.failures.size() << " failures, " << static_cast<long>(r.elapsed_ms)
        << " ms)\n";
    for (const auto& f : r.failures) {
        out << "  " << f.instance << ": " << f.clause;
        if (!f.witness.empty()) {
            out << " [";
            for (std::size_t i = 0; i < f.witness.size(); ++i) out << (i ? ", " : "") << f.witness[i];
            out << "]";
        }
        out << "\n";
    }
    for (const auto& s : r.skipped) out << "  skipped " << s.instance << " (" << s.reason << ")\n";
    return out.str();
}

} // namespace loewy
