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
#include <string>
#include <unordered_map>
#include <vector>

#include <dltbench/rdf/graph.hpp>

namespace dltbench::query {

// A single triple pattern; an unset position matches anything.
struct TriplePattern {
    std::optional<rdf::Term> subject;
    std::optional<rdf::Term> predicate;
    std::optional<rdf::Term> object;

    bool matches(const rdf::Triple& t) const {
        return (!subject || *subject == t.subject()) && (!predicate || *predicate == t.predicate()) &&
               (!object || *object == t.object());
    }
};

// Returns the triples of `g` matching `p`, sorted by canonical line.
std::vector<rdf::Triple> match_pattern(const rdf::KnowledgeGraph& g, const TriplePattern& p);

// One sorted canonical line per triple, each terminated by '\n'.
// parse_ntriples on the result reproduces the graph exactly.
std::string export_ntriples(const rdf::KnowledgeGraph& g);

// Per-position lookup index for repeated pattern queries over one graph.
// The graph must outlive the index and stay unchanged.
class QueryIndex {
  public:
    explicit QueryIndex(const rdf::KnowledgeGraph& graph);

    std::vector<rdf::Triple> match(const TriplePattern& p) const;

  private:
    const rdf::KnowledgeGraph& graph_;
    std::unordered_map<std::string, std::vector<const rdf::Triple*>> by_subject_;
    std::unordered_map<std::string, std::vector<const rdf::Triple*>> by_predicate_;
    std::unordered_map<std::string, std::vector<const rdf::Triple*>> by_object_;
};

}  // namespace dltbench::query
