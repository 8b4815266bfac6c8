#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsc {

enum class ErrorKind {
  Syntax,
  UnknownConnective,
  UnknownLogic,
  MissingAtom,
  Resource,
  IncompleteCatalog,
  OccurrenceMismatch,
  ModeMismatch,
  Precondition,
  ShapeMismatch,
  NotEntailed,
  NotContingent,
  NoSharedAtom,
  Catalog,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& msg)
      : Error(kind, msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace bsc
