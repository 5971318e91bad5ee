#include "hypint/report.hpp"

#include <cstdio>
#include <sstream>

namespace hypint {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

void VerificationReport::set_input(const std::string& key, const std::string& value) {
  for (auto& kv : inputs_)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  inputs_.emplace_back(key, value);
}

void VerificationReport::add(std::string id, std::string tag, Status status, std::string witness) {
  if (status != Status::Pass && witness.empty()) witness = "id=" + id;
  records_.push_back({std::move(id), std::move(tag), status, std::move(witness)});
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& r : other.records_) records_.push_back({prefix + r.id, r.tag, r.status, r.witness});
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t c = 0;
  for (const auto& r : records_) c += r.status == s;
  return c;
}

const CheckRecord* VerificationReport::first_failure() const {
  for (const auto& r : records_)
    if (r.status == Status::Fail) return &r;
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "# suite " << suite_ << "\n";
  os << "# version " << kVersion << "\n";
  if (seed_) os << "# seed " << *seed_ << "\n";
  for (const auto& [k, v] : inputs_) os << "# input " << k << " " << v << "\n";
  for (const auto& r : records_) {
    os << to_string(r.status) << "\t" << r.id << "\t" << r.tag;
    if (!r.witness.empty()) os << "\t" << r.witness;
    os << "\n";
  }
  os << "# summary pass=" << count(Status::Pass) << " fail=" << count(Status::Fail)
     << " inconclusive=" << count(Status::Inconclusive) << " total=" << records_.size() << "\n";
  return os.str();
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << suite_ << ": " << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, "
     << count(Status::Inconclusive) << " inconclusive";
  if (const auto* f = first_failure()) os << "\n  first failure: " << f->id << " [" << f->tag << "] " << f->witness;
  return os.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hypint
