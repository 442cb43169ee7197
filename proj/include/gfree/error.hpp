#pragma once

#include <stdexcept>
#include <string>

namespace gfree {

enum class ErrorKind {
  Construction,
  Disconnected,
  MissingEdge,
  Format,
  Capacity,
  NotATree,
  AdjacentEndpoints,
  InvalidWitness,
  Domain,
  UnsupportedRamsey,
  Usage,
  Io,
};

const char* error_kind_name(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the C API can map it
// onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t record, std::size_t offset)
      : Error(ErrorKind::Format, what), record_(record), offset_(offset) {}

  /// 1-based record index within a corpus, 0 when parsing a lone record.
  std::size_t record() const noexcept { return record_; }
  /// Byte offset inside the record where decoding failed.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t record_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace gfree
