#pragma once

#include <stdexcept>
#include <string>

namespace floer {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define FLOER_ERROR(Name)                         \
  struct Name : Error {                           \
    explicit Name(const std::string& what)        \
        : Error(std::string(#Name ": ") + what) {} \
  }

FLOER_ERROR(DimensionMismatch);
FLOER_ERROR(CompositionNonzero);
FLOER_ERROR(NotAChainMap);
FLOER_ERROR(NotAPMorphism);
FLOER_ERROR(MissingUAction);
FLOER_ERROR(MissingYAction);
FLOER_ERROR(ModulusUnsupported);
FLOER_ERROR(AssemblyInconsistent);
FLOER_ERROR(PositivityViolated);
FLOER_ERROR(IdentificationFailed);
FLOER_ERROR(ValidationError);

#undef FLOER_ERROR

struct ParseError : Error {
  ParseError(int line, const std::string& msg)
      : Error("ParseError: line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

}  // namespace floer
