#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace psu3 {

// Thrown when a computed invariant fails; the message names the failing check.
// The CLI maps this to exit code 3.
struct CheckFailure : std::logic_error {
  explicit CheckFailure(const std::string& what) : std::logic_error(what) {}
};

// Thrown when a requested group enumeration would exceed the configured
// element budget. The CLI maps this to exit code 2 and emits a partial report.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(unsigned long long order, unsigned long long budget)
      : std::runtime_error(format(order, budget)), order(order), budget(budget) {}
  unsigned long long order;
  unsigned long long budget;

 private:
  static std::string format(unsigned long long order, unsigned long long budget) {
    std::ostringstream os;
    os << "group order " << order << " exceeds element budget " << budget;
    return os.str();
  }
};

namespace detail {
[[noreturn]] inline void check_fail(const char* expr, const std::string& msg) {
  std::string what = "check failed: ";
  what += expr;
  if (!msg.empty()) {
    what += " (";
    what += msg;
    what += ")";
  }
  throw CheckFailure(what);
}
}  // namespace detail

// Invariant check that survives release builds: computed mathematical facts
// (class equation sums, idempotent orthogonality, ...) must hold or the run
// is worthless, so violations throw instead of aborting.
#define PSU3_CHECK(cond, msg)                          \
  do {                                                 \
    if (!(cond)) ::psu3::detail::check_fail(#cond, (msg)); \
  } while (0)

}  // namespace psu3
