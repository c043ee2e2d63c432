#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace clifhom {

enum class Status { Pass, Fail, NotApplicable };

const char* status_name(Status s);

struct ReportItem {
  std::string tag;
  std::string params;
  Status status = Status::Pass;
  std::string witness;
};

// Overall pass iff no item failed.
class VerificationReport {
 public:
  void add(std::string tag, std::string params, Status status, std::string witness = {});
  // Pass when ok, otherwise Fail with the witness.
  void check(bool ok, std::string tag, std::string params, std::string witness = {});
  void merge(const VerificationReport& other);

  const std::vector<ReportItem>& items() const { return items_; }
  std::size_t count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }

 private:
  std::vector<ReportItem> items_;
};

}  // namespace clifhom
