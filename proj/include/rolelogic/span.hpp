#pragma once

#include <string>

namespace rl {

// Location of a token or AST node in an input file. Lines and columns are
// 1-based; a default-constructed span means "no position available".
struct SourceSpan {
  std::string file;
  int line = 0;
  int column = 0;
  int length = 0;

  bool known() const { return line > 0; }
  std::string str() const {
    if (!known()) return "<unknown>";
    std::string s = file.empty() ? "" : file + ":";
    return s + std::to_string(line) + ":" + std::to_string(column);
  }
};

}  // namespace rl
