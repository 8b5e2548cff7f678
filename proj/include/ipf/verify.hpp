// Seeded property suites and their runners.
//
// A property is a function that samples inputs from its own Rng and records
// checks into a CaseContext. Case i of property P always draws from
// Rng(mix_seed(seed, P, i)), so cases are independent of each other and of
// the order they run in. run_verify can therefore execute cases serially or
// across OpenMP threads and produce byte-identical reports.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipf/random.hpp"

namespace ipf {

enum class Suite { axioms, psi, oracle, congruence, order, units };

std::string_view suite_name(Suite s);
// "all" expands to every suite; unknown names yield nullopt.
std::optional<std::vector<Suite>> parse_suite(std::string_view name);

enum class Execution { serial, parallel };

struct Failure {
  std::uint64_t case_index = 0;
  std::string check;
  // Re-runnable CLI invocations reproducing the failing computation.
  std::vector<std::string> commands;
};

class CaseContext {
 public:
  template <class Repro>
  void check(bool ok, std::string_view name, Repro&& repro) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (!first_) first_ = Failure{0, std::string(name), repro()};
  }
  void check(bool ok, std::string_view name) {
    check(ok, name, [] { return std::vector<std::string>{}; });
  }

  std::uint64_t checks() const noexcept { return checks_; }
  std::uint64_t failed() const noexcept { return failed_; }
  std::optional<Failure> const& first_failure() const noexcept { return first_; }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failed_ = 0;
  std::optional<Failure> first_;
};

struct Property {
  std::string_view name;
  Suite suite;
  void (*run)(CaseContext& cx, Rng& rng, Value bound);
};

std::span<Property const> properties();
Property const* find_property(std::string_view name);

struct PropertyResult {
  std::string_view name;
  Suite suite = Suite::axioms;
  std::uint64_t cases = 0;
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::optional<Failure> first;
};

PropertyResult run_property(Property const& prop, std::uint64_t cases,
                            std::uint64_t seed, Value bound, Execution exec);

struct VerifyOptions {
  std::vector<Suite> suites;
  std::uint64_t cases = 0;
  std::uint64_t seed = 0;
  Value bound = 16;
  Execution exec = Execution::parallel;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<PropertyResult> results;

  bool passed() const;
  // Deterministic text: identical options give identical bytes regardless
  // of the execution mode.
  std::string text() const;
};

VerifyReport run_verify(VerifyOptions const& options);

// Box-size rule for the differential oracle: sequence values are drawn from
// [1, oracle_max_value(bound)], and each case widens its box to
// max(bound, largest coordinate + 9) so that every truncated composite keeps
// at least 10 interior points.
Value oracle_max_value(Value bound);

}  // namespace ipf
