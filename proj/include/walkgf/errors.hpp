#pragma once

#include <stdexcept>
#include <string>

namespace walkgf {

// Violated precondition or malformed input (CLI maps this to exit code 2).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace walkgf
