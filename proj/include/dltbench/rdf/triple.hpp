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

#include <dltbench/rdf/term.hpp>

namespace dltbench::rdf {

// One RDF statement. Subject is an IRI or blank node, predicate is an IRI,
// object is any term. Identity is the canonical N-Triples line.
class Triple {
  public:
    Triple(Term subject, Term predicate, Term object);

    const Term& subject() const noexcept { return subject_; }
    const Term& predicate() const noexcept { return predicate_; }
    const Term& object() const noexcept { return object_; }

    // "<s> <p> <o> ." without a trailing newline; byte-deterministic.
    std::string canonical_line() const;

    friend bool operator==(const Triple& a, const Triple& b) {
        return a.subject_ == b.subject_ && a.predicate_ == b.predicate_ && a.object_ == b.object_;
    }
    friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
        if (auto c = a.subject_ <=> b.subject_; c != 0) return c;
        if (auto c = a.predicate_ <=> b.predicate_; c != 0) return c;
        return a.object_ <=> b.object_;
    }

  private:
    Term subject_;
    Term predicate_;
    Term object_;
};

// Convenience for the common all-IRI case.
Triple make_iri_triple(std::string subject, std::string predicate, std::string object);

std::string canonical_line(const Triple& t);

}  // namespace dltbench::rdf
