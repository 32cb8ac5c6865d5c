#pragma once

// Pass/fail bookkeeping for the law checkers.  Failures are data: a checker
// never throws because a law does not hold, it records the first witness.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace aoperad {

struct LawResult {
  std::string law;
  std::size_t cases = 0;
  bool passed = true;
  std::string witness;  // first counterexample, empty when passed
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const noexcept { return title_; }
  const std::vector<LawResult>& laws() const noexcept { return laws_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  // Returns the entry for `law`, creating it on first use.
  LawResult& law(const std::string& name) {
    for (auto& l : laws_) {
      if (l.law == name) {
        return l;
      }
    }
    laws_.push_back(LawResult{name, 0, true, {}});
    return laws_.back();
  }

  // Counts one case of `name`; on the first failure stores witness().
  bool check(const std::string& name, bool ok, const std::function<std::string()>& witness) {
    auto& l = law(name);
    ++l.cases;
    if (!ok && l.passed) {
      l.passed = false;
      l.witness = witness();
    }
    return ok;
  }

  void add(LawResult result) { laws_.push_back(std::move(result)); }
  void note(std::string line) { notes_.push_back(std::move(line)); }

  void merge(const Report& other) {
    for (const auto& l : other.laws_) {
      laws_.push_back(l);
    }
    for (const auto& n : other.notes_) {
      notes_.push_back(n);
    }
  }

  bool passed(const std::string& name) const {
    for (const auto& l : laws_) {
      if (l.law == name) {
        return l.passed;
      }
    }
    return false;
  }

  const LawResult* find(const std::string& name) const {
    for (const auto& l : laws_) {
      if (l.law == name) {
        return &l;
      }
    }
    return nullptr;
  }

  bool all_passed() const {
    for (const auto& l : laws_) {
      if (!l.passed) {
        return false;
      }
    }
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& l : laws_) {
      n += l.passed ? 0 : 1;
    }
    return n;
  }

  // One line per law: "PASS <law> (<cases> cases)" or
  // "FAIL <law> (<cases> cases): <witness>", then any notes.
  std::string text() const {
    std::string out;
    if (!title_.empty()) {
      out += "== " + title_ + "\n";
    }
    for (const auto& l : laws_) {
      out += l.passed ? "PASS " : "FAIL ";
      out += l.law + " (" + std::to_string(l.cases) + (l.cases == 1 ? " case)" : " cases)");
      if (!l.passed) {
        out += ": " + l.witness;
      }
      out += "\n";
    }
    for (const auto& n : notes_) {
      out += n + "\n";
    }
    return out;
  }

 private:
  std::string title_;
  std::vector<LawResult> laws_;
  std::vector<std::string> notes_;
};

}  // namespace aoperad
