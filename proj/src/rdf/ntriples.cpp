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

#include <dltbench/rdf/parse.hpp>

#include <cctype>

namespace dltbench::rdf {

namespace {

bool is_ws(char c) {
    return c == ' ' || c == '\t' || c == '\r';
}

// Validates UTF-8 and returns the byte offset of the first invalid sequence,
// or npos if the whole buffer is valid.
std::size_t first_invalid_utf8(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        std::size_t len;
        if (c < 0x80) {
            len = 1;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
        } else {
            return i;
        }
        if (i + len > text.size()) {
            return i;
        }
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) {
                return i;
            }
        }
        // Reject overlong encodings of the most common shapes.
        if (len == 2 && c < 0xC2) {
            return i;
        }
        i += len;
    }
    return std::string_view::npos;
}

struct Cursor {
    std::string_view text;
    std::size_t pos{0};
    std::size_t line;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!eof() && is_ws(peek())) {
            ++pos;
        }
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line, pos + 1); }
};

std::string scan_iri(Cursor& cur) {
    // cur.peek() == '<'
    ++cur.pos;
    std::string raw;
    while (true) {
        if (cur.eof() || cur.peek() == '\n') {
            cur.fail("unterminated IRI");
        }
        char c = cur.text[cur.pos++];
        if (c == '>') {
            break;
        }
        raw.push_back(c);
    }
    std::string iri;
    if (!unescape_string(raw, iri)) {
        cur.fail("malformed escape in IRI");
    }
    return iri;
}

std::string scan_blank_label(Cursor& cur) {
    // cur starts at '_'
    if (cur.pos + 1 >= cur.text.size() || cur.text[cur.pos + 1] != ':') {
        cur.fail("expected \"_:\" blank node prefix");
    }
    cur.pos += 2;
    std::string label;
    while (!cur.eof()) {
        char c = cur.peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
            label.push_back(c);
            ++cur.pos;
        } else {
            break;
        }
    }
    // A trailing dot belongs to the statement, not the label.
    while (!label.empty() && label.back() == '.') {
        label.pop_back();
        --cur.pos;
    }
    if (label.empty()) {
        cur.fail("empty blank node label");
    }
    return label;
}

Term scan_literal(Cursor& cur) {
    // cur.peek() == '"'
    ++cur.pos;
    std::string raw;
    while (true) {
        if (cur.eof() || cur.peek() == '\n') {
            cur.fail("unterminated string literal");
        }
        char c = cur.text[cur.pos++];
        if (c == '"') {
            break;
        }
        raw.push_back(c);
        if (c == '\\') {
            if (cur.eof() || cur.peek() == '\n') {
                cur.fail("unterminated escape sequence");
            }
            raw.push_back(cur.text[cur.pos++]);
        }
    }
    std::string lexical;
    if (!unescape_string(raw, lexical)) {
        cur.fail("malformed escape in string literal");
    }
    if (!cur.eof() && cur.peek() == '@') {
        ++cur.pos;
        std::string lang;
        while (!cur.eof() && (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '-')) {
            lang.push_back(cur.peek());
            ++cur.pos;
        }
        if (lang.empty()) {
            cur.fail("empty language tag");
        }
        return Term::literal(std::move(lexical), std::move(lang));
    }
    if (cur.pos + 1 < cur.text.size() && cur.peek() == '^' && cur.text[cur.pos + 1] == '^') {
        cur.pos += 2;
        cur.skip_ws();
        if (cur.eof() || cur.peek() != '<') {
            cur.fail("expected datatype IRI after ^^");
        }
        std::string datatype = scan_iri(cur);
        return Term::literal(std::move(lexical), {}, std::move(datatype));
    }
    return Term::literal(std::move(lexical));
}

Term scan_term(Cursor& cur, bool allow_literal) {
    cur.skip_ws();
    if (cur.eof()) {
        cur.fail("unexpected end of statement");
    }
    char c = cur.peek();
    if (c == '<') {
        return Term::iri(scan_iri(cur));
    }
    if (c == '_') {
        return Term::blank(scan_blank_label(cur));
    }
    if (c == '"') {
        if (!allow_literal) {
            cur.fail("literal not allowed in this position");
        }
        return scan_literal(cur);
    }
    cur.fail(std::string("unexpected character '") + c + "'");
}

}  // namespace

std::string ParseError::format(const std::string& message, std::size_t line, std::size_t column) {
    std::string out = message + " (line " + std::to_string(line);
    if (column > 0) {
        out += ", column " + std::to_string(column);
    }
    out += ")";
    return out;
}

std::vector<Triple> parse_ntriples(std::string_view text) {
    if (std::size_t bad = first_invalid_utf8(text); bad != std::string_view::npos) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < bad; ++i) {
            if (text[i] == '\n') {
                ++line;
            }
        }
        throw ParseError("input is not valid UTF-8", line);
    }

    std::vector<Triple> triples;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw_line =
            end == std::string_view::npos ? text.substr(start) : text.substr(start, end - start);
        ++line_no;

        Cursor cur{raw_line, 0, line_no};
        cur.skip_ws();
        if (!cur.eof() && cur.peek() != '#') {
            try {
                Term subject = scan_term(cur, /*allow_literal=*/false);
                Term predicate = scan_term(cur, /*allow_literal=*/false);
                if (!predicate.is_iri()) {
                    cur.fail("predicate must be an IRI");
                }
                Term object = scan_term(cur, /*allow_literal=*/true);
                cur.skip_ws();
                if (cur.eof() || cur.peek() != '.') {
                    cur.fail("expected '.' at end of statement");
                }
                ++cur.pos;
                cur.skip_ws();
                if (!cur.eof() && cur.peek() != '#') {
                    cur.fail("trailing characters after '.'");
                }
                triples.emplace_back(std::move(subject), std::move(predicate), std::move(object));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line_no);
            }
        }

        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return triples;
}

Term parse_nt_term(std::string_view token) {
    Cursor cur{token, 0, 1};
    Term term = scan_term(cur, /*allow_literal=*/true);
    cur.skip_ws();
    if (!cur.eof()) {
        cur.fail("trailing characters after term");
    }
    return term;
}

}  // namespace dltbench::rdf
