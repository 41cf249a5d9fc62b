#ifndef DISCCENSUS_ERRORS_HPP
#define DISCCENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace disccensus {

// Thrown when an enumeration, factorization or search exceeds its configured
// budget. Callers may retry with a larger budget; the CLI maps this to exit
// code 3.
class budget_error : public std::runtime_error {
  public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Network failures of the LMFDB client; CLI exit code 4.
class network_error : public std::runtime_error {
  public:
    explicit network_error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid user input is reported via std::invalid_argument (CLI exit code 2).
// Internal cross-check failures that must never fire use std::logic_error.

} // namespace disccensus

#endif
