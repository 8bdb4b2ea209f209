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
#include <map>
#include <optional>

namespace dltbench::rdf {

namespace {

constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

bool pn_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '%';
}

class TurtleParser {
  public:
    explicit TurtleParser(std::string_view text) : text_{text} {}

    std::vector<Triple> run() {
        while (true) {
            skip_ws_and_comments();
            if (eof()) {
                break;
            }
            if (peek() == '@') {
                directive();
            } else {
                statement();
            }
        }
        return std::move(triples_);
    }

  private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char peek_at(std::size_t off) const { return pos_ + off < text_.size() ? text_[pos_ + off] : '\0'; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, col_); }
    [[noreturn]] void unsupported(const std::string& what) const {
        throw UnsupportedConstructError("unsupported construct: " + what, line_, col_);
    }

    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    void expect(char c, const char* what) {
        skip_ws_and_comments();
        if (eof() || peek() != c) {
            fail(std::string("expected ") + what);
        }
        advance();
    }

    bool starts_with(std::string_view kw) const { return text_.substr(pos_, kw.size()) == kw; }

    void directive() {
        if (starts_with("@prefix")) {
            for (std::size_t i = 0; i < 7; ++i) {
                advance();
            }
            skip_ws_and_comments();
            std::string name = scan_prefix_name();
            skip_ws_and_comments();
            if (eof() || peek() != '<') {
                fail("expected IRI in @prefix directive");
            }
            std::string iri = scan_iriref();
            expect('.', "'.' after @prefix directive");
            prefixes_[name] = std::move(iri);
            return;
        }
        if (starts_with("@base")) {
            unsupported("@base directive");
        }
        fail("unknown directive");
    }

    // PNAME_NS: the part before ':', possibly empty.
    std::string scan_prefix_name() {
        std::string name;
        while (!eof() && peek() != ':') {
            char c = peek();
            if (!pn_char(c)) {
                fail("malformed prefix name");
            }
            name.push_back(advance());
        }
        if (eof()) {
            fail("expected ':' in prefix name");
        }
        advance();  // ':'
        return name;
    }

    std::string scan_iriref() {
        // peek() == '<'
        advance();
        std::string raw;
        while (true) {
            if (eof() || peek() == '\n') {
                fail("unterminated IRI");
            }
            char c = advance();
            if (c == '>') {
                break;
            }
            raw.push_back(c);
        }
        std::string iri;
        if (!unescape_string(raw, iri)) {
            fail("malformed escape in IRI");
        }
        return iri;
    }

    Term scan_prefixed_name() {
        std::string token;
        while (!eof() && (pn_char(peek()) || peek() == ':')) {
            token.push_back(advance());
        }
        // A trailing '.' terminates the statement, not the name.
        while (!token.empty() && token.back() == '.') {
            token.pop_back();
            --pos_;
            --col_;
        }
        std::size_t colon = token.find(':');
        if (colon == std::string::npos) {
            if (token == "true" || token == "false") {
                unsupported("boolean literal");
            }
            fail("expected ':' in prefixed name: \"" + token + "\"");
        }
        std::string prefix = token.substr(0, colon);
        std::string local = token.substr(colon + 1);
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) {
            fail("undefined prefix: \"" + prefix + ":\"");
        }
        return Term::iri(it->second + local);
    }

    Term scan_string_literal() {
        char quote = peek();  // '"' or '\''
        bool long_form = peek_at(1) == quote && peek_at(2) == quote;
        std::string raw;
        if (long_form) {
            advance();
            advance();
            advance();
            while (true) {
                if (eof()) {
                    fail("unterminated long string literal");
                }
                if (peek() == quote && peek_at(1) == quote && peek_at(2) == quote) {
                    advance();
                    advance();
                    advance();
                    break;
                }
                char c = advance();
                raw.push_back(c);
                if (c == '\\') {
                    if (eof()) {
                        fail("unterminated escape sequence");
                    }
                    raw.push_back(advance());
                }
            }
        } else {
            advance();
            while (true) {
                if (eof() || peek() == '\n') {
                    fail("unterminated string literal");
                }
                char c = advance();
                if (c == quote) {
                    break;
                }
                raw.push_back(c);
                if (c == '\\') {
                    if (eof()) {
                        fail("unterminated escape sequence");
                    }
                    raw.push_back(advance());
                }
            }
        }
        std::string lexical;
        if (!unescape_string(raw, lexical)) {
            fail("malformed escape in string literal");
        }

        if (!eof() && peek() == '@') {
            advance();
            std::string lang;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
                lang.push_back(advance());
            }
            if (lang.empty()) {
                fail("empty language tag");
            }
            return Term::literal(std::move(lexical), std::move(lang));
        }
        if (!eof() && peek() == '^' && peek_at(1) == '^') {
            advance();
            advance();
            skip_ws_and_comments();
            if (eof()) {
                fail("expected datatype after ^^");
            }
            Term dt = peek() == '<' ? Term::iri(scan_iriref()) : scan_prefixed_name();
            return Term::literal(std::move(lexical), {}, dt.value());
        }
        return Term::literal(std::move(lexical));
    }

    Term scan_blank_node() {
        // peek() == '_'
        if (peek_at(1) != ':') {
            fail("expected \"_:\" blank node prefix");
        }
        advance();
        advance();
        std::string label;
        while (!eof() && pn_char(peek())) {
            label.push_back(advance());
        }
        while (!label.empty() && label.back() == '.') {
            label.pop_back();
            --pos_;
            --col_;
        }
        if (label.empty()) {
            fail("empty blank node label");
        }
        return Term::blank(std::move(label));
    }

    Term scan_subject() {
        skip_ws_and_comments();
        if (eof()) {
            fail("expected subject");
        }
        char c = peek();
        if (c == '<') {
            return Term::iri(scan_iriref());
        }
        if (c == '_') {
            return scan_blank_node();
        }
        if (c == '[') {
            unsupported("blank node property list");
        }
        if (c == '(') {
            unsupported("collection");
        }
        return scan_prefixed_name();
    }

    Term scan_verb() {
        skip_ws_and_comments();
        if (eof()) {
            fail("expected predicate");
        }
        char c = peek();
        if (c == '<') {
            return Term::iri(scan_iriref());
        }
        if (c == 'a') {
            char next = peek_at(1);
            if (next == ' ' || next == '\t' || next == '\r' || next == '\n' || next == '<' || next == '#') {
                advance();
                return Term::iri(std::string{kRdfType});
            }
        }
        if (c == '[' || c == '(') {
            unsupported("non-IRI predicate");
        }
        return scan_prefixed_name();
    }

    Term scan_object() {
        skip_ws_and_comments();
        if (eof()) {
            fail("expected object");
        }
        char c = peek();
        if (c == '<') {
            return Term::iri(scan_iriref());
        }
        if (c == '_') {
            return scan_blank_node();
        }
        if (c == '"' || c == '\'') {
            return scan_string_literal();
        }
        if (c == '[') {
            unsupported("blank node property list");
        }
        if (c == '(') {
            unsupported("collection");
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
            unsupported("numeric literal");
        }
        return scan_prefixed_name();
    }

    void statement() {
        Term subject = scan_subject();
        while (true) {
            Term predicate = scan_verb();
            // objectList
            while (true) {
                Term object = scan_object();
                emit(subject, predicate, object);
                skip_ws_and_comments();
                if (!eof() && peek() == ',') {
                    advance();
                    continue;
                }
                break;
            }
            skip_ws_and_comments();
            if (!eof() && peek() == ';') {
                advance();
                skip_ws_and_comments();
                // A dangling ';' before '.' is legal Turtle.
                if (!eof() && (peek() == '.' || peek() == ';')) {
                    while (!eof() && peek() == ';') {
                        advance();
                        skip_ws_and_comments();
                    }
                    break;
                }
                continue;
            }
            break;
        }
        expect('.', "'.' at end of statement");
    }

    void emit(const Term& subject, const Term& predicate, const Term& object) {
        try {
            triples_.emplace_back(subject, predicate, object);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_, col_);
        }
    }

    std::string_view text_;
    std::size_t pos_{0};
    std::size_t line_{1};
    std::size_t col_{1};
    std::map<std::string, std::string> prefixes_;
    std::vector<Triple> triples_;
};

}  // namespace

std::vector<Triple> parse_turtle(std::string_view text) {
    return TurtleParser{text}.run();
}

}  // namespace dltbench::rdf
