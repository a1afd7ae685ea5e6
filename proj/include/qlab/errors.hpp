#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlab {

  /// Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  /// Malformed word, presentation, polynomial or table text.  The offset is
  /// the byte position in the input at which the problem was detected.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
  };

  class UnknownGeneratorError : public ParseError {
   public:
    UnknownGeneratorError(std::string const& name, std::size_t offset)
        : ParseError("unknown generator '" + name + "'", offset), name_(name) {}

    [[nodiscard]] std::string const& name() const noexcept { return name_; }

   private:
    std::string name_;
  };

  class MissingImageError : public Error {
   public:
    using Error::Error;
  };

  /// A cyclic homomorphism whose generator degrees do not kill every relator,
  /// or that cannot be used for the requested construction.
  class HomomorphismError : public Error {
   public:
    using Error::Error;
  };

  /// A word-problem oracle was asked a question it cannot answer soundly.
  class OracleInapplicable : public Error {
   public:
    using Error::Error;
  };

}  // namespace qlab
