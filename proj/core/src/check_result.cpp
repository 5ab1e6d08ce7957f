#include "supercong/check_result.hpp"

#include <algorithm>

namespace supercong {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    case CheckStatus::error: return "error";
  }
  return "error";
}

CheckResult compare_residues(u64 p, std::string tag, std::string sub_case, const Residue& lhs, const Residue& rhs) {
  const int r = std::min(lhs.precision(), rhs.precision());
  const Residue a = lhs.reduce(r), b = rhs.reduce(r);
  CheckResult out;
  out.p = p;
  out.tag = std::move(tag);
  out.sub_case = std::move(sub_case);
  out.lhs = a.to_string();
  out.rhs = b.to_string();
  out.modulus = to_string(a.modulus().value());
  out.status = a == b ? CheckStatus::pass : CheckStatus::fail;
  return out;
}

CheckResult skipped(u64 p, std::string tag, std::string sub_case, std::string reason) {
  CheckResult out;
  out.p = p;
  out.tag = std::move(tag);
  out.sub_case = std::move(sub_case);
  out.status = CheckStatus::skip;
  out.detail = std::move(reason);
  return out;
}

CheckResult errored(u64 p, std::string tag, std::string sub_case, std::string reason) {
  CheckResult out = skipped(p, std::move(tag), std::move(sub_case), std::move(reason));
  out.status = CheckStatus::error;
  return out;
}

}  // namespace supercong
