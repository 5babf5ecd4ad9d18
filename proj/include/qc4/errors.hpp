// Exception types shared across the library. The CLI maps them to exit codes:
// InvalidArgumentError -> 2, RefusalError -> 1, BudgetError -> 3.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qc4 {

class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed request: bad degrees, mismatched fields, non-coset-closed zero
// sets, division by zero and the like.
class InvalidArgumentError : public Error {
   public:
    explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

// A construction whose mathematical hypothesis failed (e.g. the input code is
// not self-orthogonal). Carries a JSON rendering of the failing report.
class RefusalError : public Error {
   public:
    RefusalError(const std::string& what, std::string report_json)
        : Error(what), report_json_(std::move(report_json)) {}
    const std::string& report_json() const { return report_json_; }

   private:
    std::string report_json_;
};

// An exact computation was requested whose size exceeds the configured budget.
class BudgetError : public Error {
   public:
    BudgetError(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : Error(what), required_(required), budget_(budget) {}
    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

   private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace qc4
