#pragma once

#include <stdexcept>
#include <string>

namespace monogen {

// Raised when an operation's preconditions do not hold. The message names
// the violated condition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monogen
