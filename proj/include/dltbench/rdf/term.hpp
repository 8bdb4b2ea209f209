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

#include <compare>
#include <string>
#include <string_view>

namespace dltbench::rdf {

inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";

enum class TermKind {
    kIri,
    kBlank,
    kLiteral,
};

// One RDF term. Literals carry an optional language tag (stored lowercase)
// or an optional datatype IRI, never both. A literal typed xsd:string is
// normalized to a plain literal at construction.
class Term {
  public:
    static Term iri(std::string value);
    static Term blank(std::string label);
    static Term literal(std::string lexical, std::string language = {}, std::string datatype = {});

    TermKind kind() const noexcept { return kind_; }
    const std::string& value() const noexcept { return value_; }
    const std::string& language() const noexcept { return language_; }
    const std::string& datatype() const noexcept { return datatype_; }

    bool is_iri() const noexcept { return kind_ == TermKind::kIri; }
    bool is_blank() const noexcept { return kind_ == TermKind::kBlank; }
    bool is_literal() const noexcept { return kind_ == TermKind::kLiteral; }

    // N-Triples surface form: <iri>, _:label, or "escaped"@lang / "escaped"^^<dt>.
    std::string nt() const;
    void append_nt(std::string& out) const;

    friend bool operator==(const Term&, const Term&) = default;
    friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

  private:
    Term(TermKind kind, std::string value, std::string language, std::string datatype)
        : kind_{kind}, value_{std::move(value)}, language_{std::move(language)}, datatype_{std::move(datatype)} {}

    TermKind kind_{TermKind::kIri};
    std::string value_;
    std::string language_;
    std::string datatype_;
};

// Appends the literal escape of `raw` (ECHAR for " \ LF CR TAB, backspace and
// form feed as \b \f, other bytes verbatim UTF-8).
void append_escaped_literal(std::string& out, std::string_view raw);

// Inverse of append_escaped_literal plus \uXXXX / \UXXXXXXXX escapes.
// Returns false on a malformed escape sequence.
bool unescape_string(std::string_view escaped, std::string& out);

// Encodes a Unicode code point as UTF-8.
void append_utf8(std::string& out, char32_t code_point);

}  // namespace dltbench::rdf
