#include <cstdlib>
#include <string>

#include "loewy/error.hpp"
#include "loewy/limits.hpp"

namespace loewy {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DupElem: return "E_DUP_ELEM";
    case ErrorCode::Cycle: return "E_CYCLE";
    case ErrorCode::NotCover: return "E_NOT_COVER";
    case ErrorCode::NoBound: return "E_NO_BOUND";
    case ErrorCode::NotLattice: return "E_NOT_LATTICE";
    case ErrorCode::Index: return "E_INDEX";
    case ErrorCode::NotComparable: return "E_NOT_COMPARABLE";
    case ErrorCode::TooLarge: return "E_TOO_LARGE";
    case ErrorCode::Degenerate: return "E_DEGENERATE";
    case ErrorCode::Stall: return "E_STALL";
    case ErrorCode::Range: return "E_RANGE";
    case ErrorCode::UnknownName: return "E_UNKNOWN_NAME";
    case ErrorCode::Precondition: return "E_PRECONDITION";
    case ErrorCode::Syntax: return "E_SYNTAX";
    }
    return "E_UNKNOWN";
}

LatticeError::LatticeError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

Limits Limits::from_env() {
    Limits limits;
    if (const char* raw = std::getenv("LATTICE_MAX_N")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && value > 0) {
            limits.max_elements = static_cast<std::size_t>(value);
            limits.max_divisors = static_cast<std::size_t>(value);
        }
    }
    return limits;
}

} // namespace loewy
