#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fangood {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// A precondition of a theorem or lemma is not met; the caller asked for
// something the guarantee does not cover.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A step that is guaranteed to succeed did not. Always a bug.
class EngineDefect : public Error {
 public:
  using Error::Error;
};

}  // namespace fangood
