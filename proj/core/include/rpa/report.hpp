#pragma once

#include "rpa/linear.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpa {

/// One failing instance of an identity: the axiom, the basis indices it was
/// evaluated on, and the exact lhs - rhs coordinates (flattened row-major
/// when the identity lives in a tensor power).
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  Vec defect;
};

class AxiomReport {
 public:
  static constexpr std::size_t kDefaultLimit = 16;

  explicit AxiomReport(std::size_t limit = kDefaultLimit);

  bool ok() const { return total_ == 0; }
  explicit operator bool() const { return ok(); }
  /// The first `limit` violations in evaluation order.
  const std::vector<Violation>& violations() const { return violations_; }
  /// Number of violations found, including those beyond the limit.
  std::size_t total() const { return total_; }
  std::size_t limit() const { return limit_; }

  /// Records a violation unless the defect is zero.
  void expect_zero(std::string_view axiom, std::vector<std::size_t> indices, const Vec& defect);
  void expect_zero(std::string_view axiom, std::vector<std::size_t> indices, const Matrix& defect);
  void expect_zero(std::string_view axiom, std::vector<std::size_t> indices, const Array3& defect);
  void add(Violation v);
  /// Appends the violations of `other`, prefixing axiom names.
  void merge(const AxiomReport& other, std::string_view prefix = {});
  /// True when some recorded violation's axiom name starts with `prefix`.
  bool mentions(std::string_view prefix) const;

 private:
  std::size_t limit_;
  std::size_t total_ = 0;
  std::vector<Violation> violations_;
};

/// Raised when an operation's input fails a stated precondition.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Throws PreconditionError naming the first violation when the report fails.
void require(const AxiomReport& report, const std::string& stage);

}  // namespace rpa
