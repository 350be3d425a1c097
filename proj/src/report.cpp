#include "sgpd/report.hpp"

#include <sstream>

namespace sgpd {

void Report::merge(const std::string& prefix, const Report& sub) {
  for (const Violation& v : sub.violations_) {
    violations_.push_back({prefix + "/" + v.axiom, v.witness, v.note});
  }
  for (const Fact& f : sub.facts_) {
    facts_.push_back({prefix + "/" + f.name, f.value});
  }
}

void Report::merge(const Report& sub) {
  violations_.insert(violations_.end(), sub.violations_.begin(), sub.violations_.end());
  facts_.insert(facts_.end(), sub.facts_.begin(), sub.facts_.end());
}

bool Report::has_violation(const std::string& axiom) const {
  for (const Violation& v : violations_) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

std::size_t Report::count_violations(const std::string& axiom) const {
  std::size_t k = 0;
  for (const Violation& v : violations_) {
    if (v.axiom == axiom) ++k;
  }
  return k;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << (pass() ? "pass" : "fail") << "\n";
  for (const Violation& v : violations_) {
    os << "violation " << v.axiom << " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ",";
      os << v.witness[i];
    }
    os << ")";
    if (!v.note.empty()) os << " " << v.note;
    os << "\n";
  }
  for (const Fact& f : facts_) {
    os << "fact " << f.name << " = " << f.value << "\n";
  }
  return os.str();
}

}  // namespace sgpd
