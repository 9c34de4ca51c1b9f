#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polycss {

enum class ErrorKind {
    UnsupportedField,
    FieldMismatch,
    DivisionByZero,
    Parse,
    Precondition,
    BudgetExceeded,
    TimeLimit,
    InvalidParams,
    Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Thrown by exhaustive enumeration when the codeword count exceeds the caller's budget.
// `required` is the number of word visits the enumeration would have needed (saturating).
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace polycss
