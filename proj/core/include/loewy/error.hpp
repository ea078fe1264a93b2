#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loewy {

enum class ErrorCode {
    DupElem,
    Cycle,
    NotCover,
    NoBound,
    NotLattice,
    Index,
    NotComparable,
    TooLarge,
    Degenerate,
    Stall,
    Range,
    UnknownName,
    Precondition,
    Syntax,
};

/// Stable token for an error code, e.g. "E_NOT_COVER".
std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class LatticeError : public std::runtime_error {
public:
    LatticeError(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace loewy
