#include "tensorrest/law_report.hpp"

#include <algorithm>

namespace tensorrest {

void LawReport::add(Violation v) {
  violations_.push_back(std::move(v));
  dirty_ = true;
}

void LawReport::add(std::string axiom, std::initializer_list<MorId> witness, std::optional<MorId> lhs,
                    std::optional<MorId> rhs) {
  add(Violation{std::move(axiom), std::vector<MorId>(witness), lhs, rhs});
}

void LawReport::merge(const LawReport& other) {
  for (const auto& v : other.violations()) violations_.push_back(v);
  dirty_ = true;
}

std::size_t LawReport::count(std::string_view axiom) const {
  const auto& vs = violations();
  return static_cast<std::size_t>(
      std::count_if(vs.begin(), vs.end(), [&](const Violation& v) { return v.axiom == axiom; }));
}

const std::vector<Violation>& LawReport::violations() const {
  normalize();
  return violations_;
}

void LawReport::normalize() const {
  if (!dirty_) return;
  std::sort(violations_.begin(), violations_.end());
  violations_.erase(std::unique(violations_.begin(), violations_.end()), violations_.end());
  dirty_ = false;
}

}  // namespace tensorrest
