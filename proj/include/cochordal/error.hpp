#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cochordal {

enum class Errc {
  self_loop,
  index_out_of_range,
  duplicate_label,
  not_a_permutation,
  not_cochordal,
  unknown_vertex,
  cap_exceeded,
  non_prime_characteristic,
  out_of_range,
  not_applicable,
  is_cochordal,
  parse_error,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::not_cochordal: return "NotCochordal";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::non_prime_characteristic: return "NonPrimeCharacteristic";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::is_cochordal: return "IsCochordal";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Edge referenced by vertex index.
using Edge = std::pair<std::size_t, std::size_t>;

/// Two disjoint edges with no other edges among their endpoints.
using TwoMatching = std::pair<Edge, Edge>;

class NotCochordalError : public Error {
 public:
  explicit NotCochordalError(const std::string& what,
                             std::optional<TwoMatching> witness = std::nullopt)
      : Error(Errc::not_cochordal, what), witness_(witness) {}

  /// Induced 2-matching certifying the failure, when one exists.
  const std::optional<TwoMatching>& witness() const noexcept { return witness_; }

 private:
  std::optional<TwoMatching> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cochordal
