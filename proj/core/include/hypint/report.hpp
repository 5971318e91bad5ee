#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypint {

inline constexpr const char* kVersion = "1.0.0";

enum class Status { Pass, Fail, Inconclusive };
const char* to_string(Status s);

struct CheckRecord {
  std::string id;
  std::string tag;  // short name of the property being checked
  Status status = Status::Pass;
  std::string witness;
};

/// Outcome of a verification suite. Fail and inconclusive records always
/// carry a witness; summary counts are derived from the records, and the text
/// form is a pure function of the contents (no clocks, no addresses).
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite = "") : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  void set_input(const std::string& key, const std::string& value);
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void add(std::string id, std::string tag, Status status, std::string witness = "");
  void pass(std::string id, std::string tag, std::string witness = "") {
    add(std::move(id), std::move(tag), Status::Pass, std::move(witness));
  }
  void fail(std::string id, std::string tag, std::string witness) {
    add(std::move(id), std::move(tag), Status::Fail, std::move(witness));
  }
  void inconclusive(std::string id, std::string tag, std::string witness) {
    add(std::move(id), std::move(tag), Status::Inconclusive, std::move(witness));
  }
  /// Appends the records of `other`, prefixing their ids.
  void absorb(const VerificationReport& other, const std::string& prefix = "");

  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
  bool all_pass() const { return count(Status::Fail) == 0 && count(Status::Inconclusive) == 0; }
  const CheckRecord* first_failure() const;

  std::string to_text() const;
  std::string summary() const;

 private:
  std::string suite_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::optional<std::uint64_t> seed_;
  std::vector<CheckRecord> records_;
};

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace hypint
