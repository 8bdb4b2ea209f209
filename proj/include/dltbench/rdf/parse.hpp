/*
   Copyright 2026 The dltbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <dltbench/rdf/triple.hpp>

namespace dltbench::rdf {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, std::size_t line, std::size_t column = 0)
        : std::runtime_error(format(message, line, column)), line_{line}, column_{column} {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line_;
    std::size_t column_;
};

// Raised for Turtle constructs outside the supported subset. Never silently
// skipped: downstream measurements would be wrong on a partial parse.
class UnsupportedConstructError : public ParseError {
  public:
    using ParseError::ParseError;
};

// Parses an N-Triples document. One statement per line, "." terminated,
// "#" comment lines and blank lines allowed. Duplicate statements yield
// duplicate list entries. Throws ParseError with the 1-based line number.
std::vector<Triple> parse_ntriples(std::string_view text);

// Parses the supported Turtle subset: @prefix, prefixed names, "a",
// ";" and "," abbreviations, string/typed/language-tagged literals and
// blank node labels. Everything else raises UnsupportedConstructError or
// ParseError with line/column. Prefixes are fully expanded in the result.
std::vector<Triple> parse_turtle(std::string_view text);

// Parses one N-Triples term (used by the CLI for query pattern arguments).
Term parse_nt_term(std::string_view token);

}  // namespace dltbench::rdf
