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

#include <dltbench/strategy/triple_op.hpp>

#include <dltbench/rdf/parse.hpp>

namespace dltbench::strategy {

namespace {

constexpr std::string_view kDeletePrefix = "DELETE:";
constexpr std::string_view kUpdatePrefix = "UPDATE:";

void append_framed_line(std::string& out, const std::string& line) {
    out += std::to_string(line.size());
    out.push_back('|');
    out += line;
}

rdf::Triple parse_line(std::string_view line) {
    std::vector<rdf::Triple> parsed;
    try {
        parsed = rdf::parse_ntriples(line);
    } catch (const rdf::ParseError& e) {
        throw MalformedPayloadError(std::string{"unparsable triple line: "} + e.what());
    }
    if (parsed.size() != 1) {
        throw MalformedPayloadError("expected exactly one triple, found " + std::to_string(parsed.size()));
    }
    return std::move(parsed.front());
}

std::string_view take_framed_line(std::string_view& rest) {
    std::size_t bar = rest.find('|');
    if (bar == std::string_view::npos || bar == 0) {
        throw MalformedPayloadError("missing length frame in UPDATE payload");
    }
    std::size_t len = 0;
    for (char c : rest.substr(0, bar)) {
        if (c < '0' || c > '9') {
            throw MalformedPayloadError("non-decimal length frame in UPDATE payload");
        }
        len = len * 10 + static_cast<std::size_t>(c - '0');
        if (len > rest.size()) {
            throw MalformedPayloadError("length frame exceeds payload size");
        }
    }
    std::string_view after = rest.substr(bar + 1);
    if (after.size() < len) {
        throw MalformedPayloadError("truncated UPDATE payload");
    }
    std::string_view line = after.substr(0, len);
    rest = after.substr(len);
    return line;
}

}  // namespace

std::string_view to_string(OpKind kind) {
    switch (kind) {
        case OpKind::kInsert:
            return "INSERT";
        case OpKind::kDelete:
            return "DELETE";
        case OpKind::kUpdate:
            return "UPDATE";
    }
    return "?";
}

std::string encode_direct_op(const TripleOp& op) {
    switch (op.kind()) {
        case OpKind::kInsert:
            return op.triple().canonical_line();
        case OpKind::kDelete:
            return std::string{kDeletePrefix} + op.triple().canonical_line();
        case OpKind::kUpdate: {
            std::string out{kUpdatePrefix};
            append_framed_line(out, op.old_triple().canonical_line());
            append_framed_line(out, op.new_triple().canonical_line());
            return out;
        }
    }
    throw MalformedPayloadError("unknown op kind");
}

TripleOp decode_direct_op(std::string_view payload) {
    if (payload.starts_with(kDeletePrefix)) {
        return TripleOp::remove(parse_line(payload.substr(kDeletePrefix.size())));
    }
    if (payload.starts_with(kUpdatePrefix)) {
        std::string_view rest = payload.substr(kUpdatePrefix.size());
        rdf::Triple old_t = parse_line(take_framed_line(rest));
        rdf::Triple new_t = parse_line(take_framed_line(rest));
        if (!rest.empty()) {
            throw MalformedPayloadError("trailing bytes after UPDATE payload");
        }
        return TripleOp::update(std::move(old_t), std::move(new_t));
    }
    return TripleOp::insert(parse_line(payload));
}

}  // namespace dltbench::strategy
