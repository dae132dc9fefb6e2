#ifndef SADIC_DIRSEQ_FORMAT_HPP
#define SADIC_DIRSEQ_FORMAT_HPP

#include <stdexcept>
#include <string>

#include "sadic/directive.hpp"

namespace sadic {

// Syntax or structural error in a directive-sequence file; the message
// always carries "line L, col C".
class parse_error : public std::invalid_argument {
 public:
  parse_error(std::size_t line, std::size_t col, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ", col " +
                              std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

// Line-oriented format:
//
//   # comment
//   alphabet 0: 0 1
//   alphabet 1: 0 1
//   morphism 0:
//     0 -> 0 1
//     1 -> 0
//   tail repeat 1
//
// Levels must appear in order; `morphism k` maps the letters of alphabet
// k+1 to words over alphabet k; `tail repeat p` repeats the last p levels
// forever (omitted: the listed levels are all there is). The primitivity
// hint on the result is computed from the repeating block's incidence
// matrix, never taken on faith.
DirectiveSequence parse_dirseq(const std::string& text);

// parse_dirseq on a file's contents; prefixes diagnostics with the path.
DirectiveSequence load_dirseq(const std::string& path);

// Canonical form: alphabets first, then morphisms, then the tail rule;
// parse(serialize(ds)) reproduces ds including glyphs.
std::string serialize_dirseq(const DirectiveSequence& ds);

}  // namespace sadic

#endif
