#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratkit {

enum class ErrorKind {
    Malformed,        // input violates a structural invariant
    OutOfRange,       // an operator or flag index is out of range
    BudgetExceeded,   // enumeration hit the configured ceiling
    IntegerOverflow,  // exact integer arithmetic would overflow
    NotCofibrant,     // a diagram fails the cofibrancy conditions
    Internal
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

// Default node-expansion ceiling for every backtracking enumeration.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace stratkit
