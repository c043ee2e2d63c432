#include "clifhom/report.hpp"

#include <algorithm>

namespace clifhom {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

void VerificationReport::add(std::string tag, std::string params, Status status, std::string witness) {
  items_.push_back({std::move(tag), std::move(params), status, std::move(witness)});
}

void VerificationReport::check(bool ok, std::string tag, std::string params, std::string witness) {
  add(std::move(tag), std::move(params), ok ? Status::Pass : Status::Fail,
      ok ? std::string() : std::move(witness));
}

void VerificationReport::merge(const VerificationReport& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [s](const ReportItem& i) { return i.status == s; }));
}

}  // namespace clifhom
