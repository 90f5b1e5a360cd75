#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cochordal/error.hpp"

namespace cochordal {

/// Run of consecutive type entries: first, first+step, ..., `length` terms.
/// Step is 0 (repeated value) or -1 (descending by one).
struct TypeRun {
  std::uint64_t first = 0;
  std::uint64_t length = 0;
  int step = 0;

  std::uint64_t value_at(std::uint64_t s) const { return step == 0 ? first : first - s; }
  std::uint64_t last() const { return value_at(length - 1); }

  friend bool operator==(const TypeRun&, const TypeRun&) = default;
};

/// Type sequence (a_k, ..., a_1), stored left to right as runs.
class TypeSequence {
 public:
  TypeSequence() = default;

  TypeSequence(std::initializer_list<std::uint64_t> values) {
    for (auto v : values) push_back(v);
  }

  static TypeSequence from_values(const std::vector<std::uint64_t>& values) {
    TypeSequence t;
    for (auto v : values) t.push_back(v);
    return t;
  }

  /// Appends one entry on the right, merging into a repeated-value run.
  void push_back(std::uint64_t value) { push_run(value, 1, 0); }

  void push_run(std::uint64_t first, std::uint64_t length, int step) {
    if (length == 0) return;
    if (step != 0 && step != -1) throw Error(Errc::out_of_range, "run step must be 0 or -1");
    if (step == -1 && length - 1 > first) throw Error(Errc::out_of_range, "descending run below zero");
    if (length == 1) step = 0;
    size_ += length;
    if (!runs_.empty()) {
      TypeRun& back = runs_.back();
      const bool back_single = back.length == 1;
      if (step == 0 && back.step == 0 && back.first == first) {
        back.length += length;
        return;
      }
      const bool descends = (step == -1 || length == 1) && (back.step == -1 || back_single);
      if (descends && back.last() >= 1 && back.last() - 1 == first) {
        back.step = -1;
        back.length += length;
        return;
      }
    }
    runs_.push_back({first, length, step});
  }

  /// Appends a descending run start, start-1, ..., start-length+1.
  void push_descending(std::uint64_t start, std::uint64_t length) { push_run(start, length, -1); }

  const std::vector<TypeRun>& runs() const noexcept { return runs_; }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  std::vector<std::uint64_t> expand() const {
    std::vector<std::uint64_t> out;
    out.reserve(size_);
    for (const auto& r : runs_) {
      for (std::uint64_t s = 0; s < r.length; ++s) out.push_back(r.value_at(s));
    }
    return out;
  }

  /// Sum of all entries; equals the edge count for a graph's type.
  template <typename Int>
  Int sum() const {
    Int total = 0;
    for (const auto& r : runs_) {
      Int len = r.length;
      if (r.step == 0) {
        total += Int(r.first) * len;
      } else {
        // first + (first-1) + ... + (first-len+1)
        total += Int(r.first) * len - len * (len - 1) / 2;
      }
    }
    return total;
  }

  /// Canonical comparison on the expanded sequence.
  friend bool operator==(const TypeSequence& a, const TypeSequence& b) {
    return a.size_ == b.size_ && a.expand() == b.expand();
  }

  /// "(a_k,...,a_1)"; runs longer than `max_terms` are abbreviated.
  std::string to_string(std::uint64_t max_terms = 64) const {
    std::ostringstream os;
    os << '(';
    if (size_ <= max_terms) {
      bool first = true;
      for (auto v : expand()) {
        if (!first) os << ',';
        os << v;
        first = false;
      }
    } else {
      bool first = true;
      for (const auto& r : runs_) {
        if (!first) os << ',';
        first = false;
        if (r.length == 1) {
          os << r.first;
        } else if (r.step == 0) {
          os << r.first << "^" << r.length;
        } else {
          os << r.first << ".." << r.last();
        }
      }
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<TypeRun> runs_;
  std::uint64_t size_ = 0;
};

}  // namespace cochordal
