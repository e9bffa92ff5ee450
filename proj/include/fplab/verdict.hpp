#ifndef FPLAB_VERDICT_HPP
#define FPLAB_VERDICT_HPP

#include <string>

namespace fplab {

/// Outcome of a single necessary-condition filter. "Skipped" means the
/// filter's hypotheses do not apply to the data, which is distinct from
/// the data satisfying the condition.
struct FilterVerdict {
  enum class Status { Pass, Fail, Skipped };

  Status status = Status::Pass;
  std::string certificate;  // violated identity / missing witness / skip reason

  static FilterVerdict pass() { return {Status::Pass, {}}; }
  static FilterVerdict fail(std::string cert) {
    return {Status::Fail, std::move(cert)};
  }
  static FilterVerdict skipped(std::string why) {
    return {Status::Skipped, std::move(why)};
  }

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }
  bool was_skipped() const { return status == Status::Skipped; }

  const char* status_name() const {
    switch (status) {
      case Status::Pass: return "pass";
      case Status::Fail: return "fail";
      default: return "skipped";
    }
  }
};

}  // namespace fplab

#endif
