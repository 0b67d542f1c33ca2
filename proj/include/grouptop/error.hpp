/*
 * (C) Copyright 2026 grouptop developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef GROUPTOP_ERROR_HPP
#define GROUPTOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grouptop {

/// Broad failure categories, mirrored one-to-one by the C API status codes
/// and by the CLI exit codes (domain/parse/io map to exit 1, resource to 2).
enum class ErrorKind {
  Parse,     ///< malformed input text
  Domain,    ///< structurally valid input outside an operation's domain
  Resource,  ///< a configured cap (cosets, elements, simplices) was exceeded
  Io,        ///< file could not be read or written
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace grouptop

#endif  // GROUPTOP_ERROR_HPP
