#pragma once

#include <stdexcept>
#include <string>

namespace seshadri {

// Bad input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed; this indicates a bug or an unproven
// mathematical assumption that did not hold.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace seshadri
