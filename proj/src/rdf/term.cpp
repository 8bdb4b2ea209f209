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

#include <dltbench/rdf/term.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>

namespace dltbench::rdf {

namespace {

bool valid_iri(std::string_view iri) {
    if (iri.empty()) {
        return false;
    }
    for (unsigned char c : iri) {
        // IRIREF excludes control characters, space and <>"{}|^` \.
        if (c <= 0x20) {
            return false;
        }
        switch (c) {
            case '<':
            case '>':
            case '"':
            case '{':
            case '}':
            case '|':
            case '^':
            case '`':
            case '\\':
                return false;
            default:
                break;
        }
    }
    return true;
}

bool valid_blank_label(std::string_view label) {
    if (label.empty()) {
        return false;
    }
    auto label_char = [](unsigned char c) {
        return std::isalnum(c) != 0 || c == '_' || c == '-' || c == '.';
    };
    if (!std::isalnum(static_cast<unsigned char>(label.front())) && label.front() != '_') {
        return false;
    }
    if (label.back() == '.') {
        return false;
    }
    return std::all_of(label.begin(), label.end(), [&](char c) { return label_char(static_cast<unsigned char>(c)); });
}

bool valid_language(std::string_view tag) {
    if (tag.empty() || tag.front() == '-' || tag.back() == '-') {
        return false;
    }
    bool first_part = true;
    for (size_t i = 0; i < tag.size(); ++i) {
        char c = tag[i];
        if (c == '-') {
            first_part = false;
            if (i + 1 < tag.size() && tag[i + 1] == '-') {
                return false;
            }
            continue;
        }
        if (first_part) {
            if (std::isalpha(static_cast<unsigned char>(c)) == 0) {
                return false;
            }
        } else if (std::isalnum(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

Term Term::iri(std::string value) {
    if (!valid_iri(value)) {
        throw std::invalid_argument("invalid IRI: \"" + value + "\"");
    }
    return Term{TermKind::kIri, std::move(value), {}, {}};
}

Term Term::blank(std::string label) {
    if (!valid_blank_label(label)) {
        throw std::invalid_argument("invalid blank node label: \"" + label + "\"");
    }
    return Term{TermKind::kBlank, std::move(label), {}, {}};
}

Term Term::literal(std::string lexical, std::string language, std::string datatype) {
    if (!language.empty() && !datatype.empty()) {
        throw std::invalid_argument("literal cannot carry both a language tag and a datatype");
    }
    if (!language.empty()) {
        if (!valid_language(language)) {
            throw std::invalid_argument("invalid language tag: \"" + language + "\"");
        }
        language = lowercase(std::move(language));
    }
    if (!datatype.empty()) {
        if (!valid_iri(datatype)) {
            throw std::invalid_argument("invalid datatype IRI: \"" + datatype + "\"");
        }
        if (datatype == kXsdString) {
            datatype.clear();  // xsd:string is the implicit type of a plain literal
        }
    }
    return Term{TermKind::kLiteral, std::move(lexical), std::move(language), std::move(datatype)};
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp <= 0x7F) {
        out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7FF) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0xFFFF) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

void append_escaped_literal(std::string& out, std::string_view raw) {
    for (char c : raw) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\r':
                out += "\\r";
                break;
            case '\t':
                out += "\\t";
                break;
            case '\b':
                out += "\\b";
                break;
            case '\f':
                out += "\\f";
                break;
            default:
                out.push_back(c);
        }
    }
}

bool unescape_string(std::string_view escaped, std::string& out) {
    out.clear();
    out.reserve(escaped.size());
    for (size_t i = 0; i < escaped.size(); ++i) {
        char c = escaped[i];
        if (c != '\\') {
            out.push_back(c);
            continue;
        }
        if (++i >= escaped.size()) {
            return false;
        }
        char esc = escaped[i];
        switch (esc) {
            case 't':
                out.push_back('\t');
                break;
            case 'b':
                out.push_back('\b');
                break;
            case 'n':
                out.push_back('\n');
                break;
            case 'r':
                out.push_back('\r');
                break;
            case 'f':
                out.push_back('\f');
                break;
            case '"':
                out.push_back('"');
                break;
            case '\'':
                out.push_back('\'');
                break;
            case '\\':
                out.push_back('\\');
                break;
            case 'u':
            case 'U': {
                const size_t digits = esc == 'u' ? 4 : 8;
                if (escaped.size() - i - 1 < digits) {
                    return false;
                }
                char32_t cp = 0;
                for (size_t k = 0; k < digits; ++k) {
                    char h = escaped[i + 1 + k];
                    cp <<= 4;
                    if (h >= '0' && h <= '9') {
                        cp |= static_cast<char32_t>(h - '0');
                    } else if (h >= 'a' && h <= 'f') {
                        cp |= static_cast<char32_t>(h - 'a' + 10);
                    } else if (h >= 'A' && h <= 'F') {
                        cp |= static_cast<char32_t>(h - 'A' + 10);
                    } else {
                        return false;
                    }
                }
                if (cp > 0x10FFFF) {
                    return false;
                }
                append_utf8(out, cp);
                i += digits;
                break;
            }
            default:
                return false;
        }
    }
    return true;
}

void Term::append_nt(std::string& out) const {
    switch (kind_) {
        case TermKind::kIri:
            out.push_back('<');
            out += value_;
            out.push_back('>');
            break;
        case TermKind::kBlank:
            out += "_:";
            out += value_;
            break;
        case TermKind::kLiteral:
            out.push_back('"');
            append_escaped_literal(out, value_);
            out.push_back('"');
            if (!language_.empty()) {
                out.push_back('@');
                out += language_;
            } else if (!datatype_.empty()) {
                out += "^^<";
                out += datatype_;
                out.push_back('>');
            }
            break;
    }
}

std::string Term::nt() const {
    std::string out;
    append_nt(out);
    return out;
}

}  // namespace dltbench::rdf
