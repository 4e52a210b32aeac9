#pragma once

// Cycle file format.
//
// Text form:
//   # k=<k> h=<h> encoding=<tuples|ints> closed=<true|false>[ bit0=leftmost]
//   one vertex per line, either "0 1 1 0 1" (leftmost coordinate first) or
//   the integer encoding with the leftmost coordinate in bit 0.
//
// JSON form: one object {"k","h","encoding","bit0","cycle","closed"} with
// keys in that order.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "leapcycles/hypercube.hpp"

namespace leapcycles::cli {

enum class Encoding { Tuples, Ints };

const char* to_string(Encoding e) noexcept;

struct CycleDocument {
  unsigned k = 0;
  unsigned h = 0;
  Encoding encoding = Encoding::Tuples;
  /// Raw words; values outside {0,1}^k survive parsing so the verifier can
  /// report them.
  std::vector<Word> cycle;
  bool closed = true;

  friend bool operator==(const CycleDocument&, const CycleDocument&) = default;
};

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[nodiscard]] std::string write_text(const CycleDocument& doc);
[[nodiscard]] std::string write_json(const CycleDocument& doc);

/// Accepts either form; a leading '{' selects JSON. Throws ParseError.
[[nodiscard]] CycleDocument parse_document(std::string_view text);

}  // namespace leapcycles::cli
