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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <dltbench/rdf/triple.hpp>

namespace dltbench::strategy {

class MalformedPayloadError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class OpKind {
    kInsert,
    kDelete,
    kUpdate,
};

std::string_view to_string(OpKind kind);

// One storage operation. INSERT and DELETE carry a single triple, UPDATE
// carries the old and the new one.
class TripleOp {
  public:
    static TripleOp insert(rdf::Triple t) { return TripleOp{OpKind::kInsert, std::move(t), std::nullopt}; }
    static TripleOp remove(rdf::Triple t) { return TripleOp{OpKind::kDelete, std::move(t), std::nullopt}; }
    static TripleOp update(rdf::Triple old_t, rdf::Triple new_t) {
        return TripleOp{OpKind::kUpdate, std::move(old_t), std::move(new_t)};
    }

    OpKind kind() const noexcept { return kind_; }

    // INSERT/DELETE subject triple; for UPDATE this is the old triple.
    const rdf::Triple& triple() const noexcept { return primary_; }
    const rdf::Triple& old_triple() const noexcept { return primary_; }
    const rdf::Triple& new_triple() const { return *secondary_; }

    friend bool operator==(const TripleOp& a, const TripleOp& b) {
        return a.kind_ == b.kind_ && a.primary_ == b.primary_ && a.secondary_ == b.secondary_;
    }

  private:
    TripleOp(OpKind kind, rdf::Triple primary, std::optional<rdf::Triple> secondary)
        : kind_{kind}, primary_{std::move(primary)}, secondary_{std::move(secondary)} {}

    OpKind kind_;
    rdf::Triple primary_;
    std::optional<rdf::Triple> secondary_;
};

// Wire format of the direct-transaction encoding:
//   INSERT  canonical N-Triples line
//   DELETE  "DELETE:" followed by the line
//   UPDATE  "UPDATE:" followed by each line framed as "<decimal length>|<line>"
// Canonical lines begin with '<' or '_', so the prefixes cannot collide and
// the encoding is injective.
std::string encode_direct_op(const TripleOp& op);

// Inverse of encode_direct_op. Throws MalformedPayloadError on unknown
// prefixes, bad framing or unparsable triples.
TripleOp decode_direct_op(std::string_view payload);

}  // namespace dltbench::strategy
