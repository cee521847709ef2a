#pragma once

#include <stdexcept>
#include <string>

namespace prism {

// (n, s) outside the family Z_{n,s}, 1 <= s <= 3, n >= max(3, s).
class UnsupportedParameters : public std::invalid_argument {
 public:
  explicit UnsupportedParameters(const std::string& what)
      : std::invalid_argument("unsupported graph parameters: " + what) {}
};

// The phi table and lower bound hold only for n >= 4, (n, s) != (4, 3).
class OutsideTheoremScope : public std::domain_error {
 public:
  explicit OutsideTheoremScope(const std::string& what)
      : std::domain_error("outside theorem scope: " + what) {}
};

// A position function was called for parameters it does not cover.
class WrongCase : public std::logic_error {
 public:
  explicit WrongCase(const std::string& what)
      : std::logic_error("wrong case: " + what) {}
};

// Malformed labeling: unknown vertex, unlabeled vertex, non-positive label.
class LabelingError : public std::invalid_argument {
 public:
  explicit LabelingError(const std::string& what) : std::invalid_argument(what) {}
};

class NotOnCycle : public std::invalid_argument {
 public:
  explicit NotOnCycle(const std::string& what)
      : std::invalid_argument("vertex not on cycle: " + what) {}
};

class NotAPermutation : public std::invalid_argument {
 public:
  explicit NotAPermutation(const std::string& what)
      : std::invalid_argument("not a permutation: " + what) {}
};

}  // namespace prism
