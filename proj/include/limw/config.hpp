#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace limw {

// Invalid input: malformed graph, out-of-range vertex, bad layout, etc.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A solver hit its configured budget (instance too large, node limit, ...).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// File / stream problems.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

struct RunConfig {
    int oracle_cutoff = 20;          // max n for exact lmw search (hard cap 24)
    std::uint64_t mim_budget = 20'000'000;  // branch-and-bound node budget
    std::uint64_t seed = 0;
};

inline constexpr int kOracleHardCap = 24;

}  // namespace limw
