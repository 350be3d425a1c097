#ifndef SGPD_REPORT_HPP
#define SGPD_REPORT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgpd {

using Id = int;

// Malformed or out-of-contract input (bad file, missing unary map, wrong kind).
// The CLI maps this to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input exceeds a documented size guard.
struct SizeError : InputError {
  using InputError::InputError;
};

// One failed axiom instance: the axiom tag plus the elements witnessing the failure.
struct Violation {
  std::string axiom;
  std::vector<Id> witness;
  std::string note;
};

// Named derived data attached to a report (projection sets, orders, tables),
// already rendered to text.
struct Fact {
  std::string name;
  std::string value;
};

class Report {
 public:
  bool pass() const { return violations_.empty(); }

  void add(std::string axiom, std::vector<Id> witness, std::string note = "") {
    violations_.push_back({std::move(axiom), std::move(witness), std::move(note)});
  }

  void add_fact(std::string name, std::string value) {
    facts_.push_back({std::move(name), std::move(value)});
  }

  // Absorbs `sub`, prefixing each violation tag with "prefix/".
  void merge(const std::string& prefix, const Report& sub);
  // Absorbs `sub` unchanged.
  void merge(const Report& sub);

  bool has_violation(const std::string& axiom) const;
  std::size_t count_violations(const std::string& axiom) const;

  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<Fact>& facts() const { return facts_; }

  std::string to_text() const;

 private:
  std::vector<Violation> violations_;
  std::vector<Fact> facts_;
};

// A construction was invoked on input that fails its precondition checks;
// carries the failing report. The CLI maps this to exit status 1.
struct PreconditionError : std::runtime_error {
  PreconditionError(const std::string& what, Report r)
      : std::runtime_error(what), report(std::move(r)) {}
  Report report;
};

}  // namespace sgpd

#endif
