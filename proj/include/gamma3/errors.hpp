#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gamma3 {

// Requested wallpaper group name is not one of the 17 (or a known synonym).
struct UnknownGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A point element was passed that does not belong to the group's point group.
struct PointNotInGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A group element is malformed or does not belong to the wavelet group of
// the supplied GroupData (covers mixed-group usage as well).
struct InvalidElement : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A character was evaluated on an element outside the translation subgroup.
struct NotInN3 : std::domain_error {
    using std::domain_error::domain_error;
};

// A frequency was passed to a fiber operation but lies outside the
// cross-section X.
struct OmegaOutsideX : std::domain_error {
    using std::domain_error::domain_error;
};

// Element/scalar grammar violation; carries the byte offset of the failure.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace gamma3
