#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace borel {

/// Violated mathematical precondition (extremes of 1, unit-ideal invariants,
/// non-squarefree input where squarefree is required, ...).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Ill-formed input text; `position` is a 0-based byte offset into the text.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Two routes that must agree disagreed, or an exact division failed.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace borel
