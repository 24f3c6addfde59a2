#pragma once

#include <stdexcept>
#include <string>

namespace asphera {

// User-supplied data failed a structural check (bad multiplication table,
// action target not closed, quotient by a non-normal subgroup, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation would exceed the configured resource guard.  Callers get an
// explicit refusal instead of a multi-hour run or a wrong answer.
struct ScaleExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed.  Indicates a bug, never bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& what)
{
    if (!ok)
        throw InternalError(what);
}

} // namespace asphera
