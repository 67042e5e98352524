#include "rpa/report.hpp"

#include <sstream>
#include <utility>

namespace rpa {

AxiomReport::AxiomReport(std::size_t limit) : limit_(limit == 0 ? 1 : limit) {}

void AxiomReport::add(Violation v) {
  ++total_;
  if (violations_.size() < limit_) violations_.push_back(std::move(v));
}

void AxiomReport::expect_zero(std::string_view axiom, std::vector<std::size_t> indices, const Vec& defect) {
  if (is_zero(defect)) return;
  add(Violation{std::string(axiom), std::move(indices), defect});
}

void AxiomReport::expect_zero(std::string_view axiom, std::vector<std::size_t> indices, const Matrix& defect) {
  if (defect.is_zero()) return;
  add(Violation{std::string(axiom), std::move(indices), defect.data()});
}

void AxiomReport::expect_zero(std::string_view axiom, std::vector<std::size_t> indices, const Array3& defect) {
  if (defect.is_zero()) return;
  add(Violation{std::string(axiom), std::move(indices), defect.data()});
}

void AxiomReport::merge(const AxiomReport& other, std::string_view prefix) {
  for (const auto& v : other.violations_) {
    if (violations_.size() >= limit_) break;
    Violation copy = v;
    if (!prefix.empty()) copy.axiom = std::string(prefix) + " " + copy.axiom;
    violations_.push_back(std::move(copy));
  }
  total_ += other.total_;
}

bool AxiomReport::mentions(std::string_view prefix) const {
  for (const auto& v : violations_) {
    if (v.axiom.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

void require(const AxiomReport& report, const std::string& stage) {
  if (report.ok()) return;
  std::ostringstream msg;
  const auto& v = report.violations().front();
  msg << report.total() << " violation(s), first: " << v.axiom << " at (";
  for (std::size_t i = 0; i < v.indices.size(); ++i) msg << (i ? "," : "") << v.indices[i];
  msg << ")";
  throw PreconditionError(stage, msg.str());
}

}  // namespace rpa
