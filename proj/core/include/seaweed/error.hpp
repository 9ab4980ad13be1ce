#pragma once

#include <stdexcept>
#include <string>

namespace seaweed {

/// Malformed composition, seaweed, or multiset text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside an operation's domain (e.g. an even k for a family
/// that needs odd k).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by every spectrum operation when the meander is not a single path.
class NotFrobeniusError : public std::runtime_error {
 public:
  NotFrobeniusError(std::string spec_text, int index)
      : std::runtime_error("spectrum undefined: meander is not a single path (" +
                           spec_text + " has index " + std::to_string(index) + ")"),
        spec_text_(std::move(spec_text)),
        index_(index) {}

  const std::string& spec_text() const noexcept { return spec_text_; }
  int index() const noexcept { return index_; }

 private:
  std::string spec_text_;
  int index_;
};

}  // namespace seaweed
