#pragma once

#include <string>

#include "askey/exact/laurent.hpp"

namespace askey {

enum class Status { Pass, Fail, Skipped };

struct VerificationOutcome {
  Status status = Status::Pass;
  /// Residual rendering for a failure, reason for a skip.
  std::string detail;

  static VerificationOutcome pass() { return {}; }
  static VerificationOutcome fail(std::string why) { return {Status::Fail, std::move(why)}; }
  static VerificationOutcome skipped(std::string why) { return {Status::Skipped, std::move(why)}; }

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }
};

inline VerificationOutcome residual_outcome(const LaurentPoly& residual) {
  if (residual.is_zero()) return VerificationOutcome::pass();
  return VerificationOutcome::fail(residual.to_string());
}

/// Folds b into a: the first failure wins, skips only survive an all-skip run.
inline void merge(VerificationOutcome& a, const VerificationOutcome& b) {
  if (a.failed()) return;
  if (b.failed() || (a.status == Status::Skipped && b.status != Status::Skipped)) a = b;
}

const char* status_name(Status s);

}  // namespace askey
