#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wfs/fincat.hpp"

namespace wfs {

/// 1-based line/column in a category file.
struct SourcePosition {
  int line = 0;
  int column = 0;
};

/// Malformed category file or a category that fails `validate`. `what()`
/// lists every problem as "line:column: message".
class CategoryFileError : public std::runtime_error {
 public:
  struct Problem {
    SourcePosition position;
    std::string message;
  };

  explicit CategoryFileError(std::vector<Problem> problems);
  const std::vector<Problem>& problems() const { return problems_; }

 private:
  std::vector<Problem> problems_;
};

/// Parses the category document:
///
///   objects: [a, b]
///   morphisms:
///     - {name: f, src: a, dst: b}
///   identities: {a: id_a, b: id_b}
///   composition:
///     - {first: f, then: id_b, equals: f}
///
/// Identities are listed among the morphisms. Every composable pair must occur
/// exactly once in `composition`.
FiniteCategory parse_category(std::string_view text);
FiniteCategory load_category_file(const std::filesystem::path& path);

/// Inverse of parse_category; lists composites in (first, then) id order.
std::string format_category(const FiniteCategory& cat);

}  // namespace wfs
