#pragma once

// Pass/fail reports produced by the verification suites. One line per check,
// printed in insertion order.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace yhdn {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;  // shown on failure only
};

class Report {
 public:
  void add(std::string name, bool pass, std::string detail = "") {
    lines_.push_back({std::move(name), pass, std::move(detail)});
  }

  void merge(const Report& o) {
    lines_.insert(lines_.end(), o.lines_.begin(), o.lines_.end());
  }

  bool all_pass() const {
    for (const CheckLine& l : lines_)
      if (!l.pass) return false;
    return true;
  }

  const std::vector<CheckLine>& lines() const { return lines_; }

  std::string str() const {
    std::ostringstream os;
    for (const CheckLine& l : lines_) {
      os << (l.pass ? "ok   " : "FAIL ") << l.name;
      if (!l.pass && !l.detail.empty()) os << ": " << l.detail;
      os << '\n';
    }
    return os.str();
  }

 private:
  std::vector<CheckLine> lines_;
};

}  // namespace yhdn
