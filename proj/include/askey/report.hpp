#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "askey/family/family.hpp"
#include "askey/numeric/numeric.hpp"
#include "askey/outcome.hpp"

namespace askey {

enum class Suite { Basic, Christoffel, SingleShift, Operators, Theorem4, Theorem8, Numeric };

const std::vector<Suite>& all_suites();
const char* suite_name(Suite s);
/// Comma-separated names or "all"; throws ConfigError.
std::vector<Suite> parse_suites(const std::string& text);
std::vector<FamilyId> parse_families(const std::string& text);

/// Adds 1 to one printed constant ("alpha0".."alpha4", "beta", "beta_F", "D").
struct Mutation {
  FamilyId family;
  std::string constant;
};
/// "AW:beta"
Mutation parse_mutation(const std::string& text);

struct SuiteSpec {
  std::vector<FamilyId> families;
  std::vector<Suite> suites;
  int n_max = 8;
  /// Explicit bindings; a family without entries runs its bundled ones.
  std::vector<ParamBinding> bindings;
  numeric::NumericConfig numeric;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::uint64_t seed = 1;
  std::vector<Mutation> mutations;
};

/// Every family and suite, n_max = 8, bundled bindings.
SuiteSpec default_spec();
/// Throws ConfigError on an invalid spec.
void validate(const SuiteSpec& spec);

/// INI text with [suite], [numeric] and repeated [family.<tag>] sections.
/// Errors carry "source:line:" prefixes.
SuiteSpec parse_config(std::istream& in, const std::string& source);

struct RunRecord {
  FamilyId family;
  std::size_t binding_index = 0;
  std::string binding;
  Suite suite;
  std::string check;
  int n = -1;  // -1: binding-level check
  Status status = Status::Pass;
  std::string detail;
  double wall_time = 0.0;  // seconds
};

struct VerificationReport {
  SuiteSpec spec;
  std::vector<RunRecord> runs;

  std::size_t count(Status s) const;
  bool any_failed() const { return count(Status::Fail) > 0; }
};

VerificationReport run(const SuiteSpec& spec);

/// JSON document without timing data, byte-stable for a fixed spec.
std::string to_structured(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace askey
