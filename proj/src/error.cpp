#include "polycss/error.hpp"

namespace polycss {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::UnsupportedField: return "unsupported-field";
        case ErrorKind::FieldMismatch: return "field-mismatch";
        case ErrorKind::DivisionByZero: return "division-by-zero";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::BudgetExceeded: return "budget-exceeded";
        case ErrorKind::TimeLimit: return "time-limit";
        case ErrorKind::InvalidParams: return "invalid-params";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : Error(ErrorKind::BudgetExceeded,
            "enumeration needs " + std::to_string(required) + " word visits, budget is " +
                std::to_string(budget)),
      required_(required),
      budget_(budget) {}

}  // namespace polycss
