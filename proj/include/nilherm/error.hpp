#pragma once

#include <stdexcept>
#include <string>

namespace nilherm {

// Malformed textual input: rationals, Salamon strings, JSON documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input violating a mathematical requirement. `clause` names the
// violated condition so callers can dispatch on it.
class SemanticError : public std::runtime_error {
 public:
  SemanticError(std::string clause, const std::string& what)
      : std::runtime_error(clause + ": " + what), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

class PreconditionError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

}  // namespace nilherm
