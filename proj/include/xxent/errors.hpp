#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xxent {

/// Bad input: violated precondition or malformed request.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that could not reach its accuracy target.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The field sits on a ground-state level crossing.
class LevelCrossing : public InvalidArgument {
 public:
  LevelCrossing(std::string what, int index)
      : InvalidArgument(std::move(what)), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Non-fatal diagnostics collected while evaluating a point. Flags are short
/// snake_case tokens and are reported verbatim by the CLI.
class Warnings {
 public:
  void raise(std::string_view flag) {
    for (const auto& f : flags_)
      if (f == flag) return;
    flags_.emplace_back(flag);
  }
  void merge(const Warnings& other) {
    for (const auto& f : other.flags_) raise(f);
  }
  bool empty() const noexcept { return flags_.empty(); }
  bool contains(std::string_view flag) const {
    for (const auto& f : flags_)
      if (f == flag) return true;
    return false;
  }
  const std::vector<std::string>& flags() const noexcept { return flags_; }
  std::string joined(char sep = ';') const {
    std::string out;
    for (const auto& f : flags_) {
      if (!out.empty()) out += sep;
      out += f;
    }
    return out;
  }

 private:
  std::vector<std::string> flags_;
};

inline void raise_if(Warnings* w, std::string_view flag) {
  if (w != nullptr) w->raise(flag);
}

}  // namespace xxent
