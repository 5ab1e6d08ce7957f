#pragma once

#include <string>
#include <string_view>

#include "supercong/residue.hpp"

namespace supercong {

enum class CheckStatus { pass, fail, skip, error };

std::string_view status_name(CheckStatus s);

/// One verification outcome. lhs/rhs/modulus are decimal strings because
/// residues routinely exceed 64 bits.
struct CheckResult {
  u64 p = 0;
  std::string tag;
  std::string sub_case;
  std::string lhs;
  std::string rhs;
  std::string modulus;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  double elapsed_ms = 0.0;

  bool pass() const { return status == CheckStatus::pass; }
  bool counts_as_failure() const { return status == CheckStatus::fail || status == CheckStatus::error; }
};

// Compares at the coarser of the two precisions; pass iff the classes agree.
CheckResult compare_residues(u64 p, std::string tag, std::string sub_case, const Residue& lhs, const Residue& rhs);
CheckResult skipped(u64 p, std::string tag, std::string sub_case, std::string reason);
CheckResult errored(u64 p, std::string tag, std::string sub_case, std::string reason);

}  // namespace supercong
