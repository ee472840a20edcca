#pragma once

#include <stdexcept>
#include <string>

namespace cledger {

/// Error raised by every module for contract violations and bad input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cledger
