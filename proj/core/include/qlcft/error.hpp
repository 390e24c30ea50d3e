#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qlcft {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid input data: a malformed field specification, a component of the
// wrong rank, a non-prime where a prime is required, and so on.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what, std::int64_t prime = 0)
      : Error(what), prime_(prime) {}
  std::int64_t prime() const noexcept { return prime_; }

private:
  std::int64_t prime_;
};

// A computation needs a truncation level above the one configured for a
// prime. Carries the level that would make it succeed.
class LevelError : public Error {
public:
  LevelError(std::int64_t prime, int configured, int required);
  std::int64_t prime() const noexcept { return prime_; }
  int configured() const noexcept { return configured_; }
  int required() const noexcept { return required_; }

private:
  std::int64_t prime_;
  int configured_;
  int required_;
};

// Generators that span a submodule of infinite index.
class ZeroModuleError : public Error {
public:
  explicit ZeroModuleError(std::int64_t prime);
};

// The brute-force oracle refused a request that exceeds its work budget.
class BudgetError : public Error {
public:
  BudgetError(const std::string& what, std::uint64_t requested, std::uint64_t budget)
      : Error(what), requested_(requested), budget_(budget) {}
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

// Internal disagreement between two independent computations inside the
// oracle (for example triple generation vs. subgroup enumeration).
class OracleMismatch : public Error {
public:
  using Error::Error;
};

} // namespace qlcft
