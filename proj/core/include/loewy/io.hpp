#pragma once

#include <string>
#include <string_view>

#include "loewy/analysis.hpp"
#include "loewy/lattice.hpp"
#include "loewy/suites.hpp"

namespace loewy {

/**
 * Parse the plain-text lattice format:
 *
 *     # comment
 *     lattice <name>
 *     elem <id>            (one per element)
 *     cover <lower> <upper> (one per cover)
 *     end
 *
 * Blank lines and `#` lines may appear anywhere. E_SYNTAX carries the line
 * number and the expected token; structural errors come from build_from_covers.
 */
FiniteLattice parse_lattice(std::string_view text, const Limits& limits = {});

/// Canonical text: elements in canonical order, covers sorted by (lower, upper) index.
std::string write_lattice(const FiniteLattice& l);

/// DOT digraph of the Hasse diagram, edges pointing up, ranks by height.
/// With with_loewy, series members get a double border and the series chain is drawn bold.
std::string export_dot(const FiniteLattice& l, bool with_loewy);

/// JSON object with sorted keys; flags skipped by caps are the string "skipped".
std::string analysis_to_json(const FiniteLattice& l, const AnalysisReport& report);

/// Human-readable multi-line summary.
std::string analysis_to_text(const FiniteLattice& l, const AnalysisReport& report);

/// {"elapsed_ms", "failures": [{"clause", "instance", "witness"}], "instances_checked",
///  "skipped": [{"instance", "reason"}], "suite", "verdict"}
std::string report_to_json(const VerificationReport& report);

std::string report_to_text(const VerificationReport& report);

} // namespace loewy
