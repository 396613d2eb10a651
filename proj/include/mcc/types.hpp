#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcc {

/// Signed 128-bit integer used for every count and every cross-multiplication.
using Int = __int128;

enum class Family : int { Per1 = 1, Per2 = 2 };

inline int family_index(Family m) { return static_cast<int>(m); }

std::string to_string(Family m);
Family parse_family(const std::string& s);

std::string to_string(Int v);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller passed an argument outside the operation's domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure; indicates a bug, never bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int pow2(int n);

}  // namespace mcc
