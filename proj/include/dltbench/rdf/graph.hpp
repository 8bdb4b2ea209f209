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
#include <map>
#include <string>
#include <vector>

#include <dltbench/rdf/triple.hpp>

namespace dltbench::rdf {

// A set of triples keyed by canonical line. Iteration order is the canonical
// line order, which makes every derived artifact (exports, diffs, reports)
// deterministic. Mutation is single-threaded; a graph that is no longer being
// mutated is safe to read from any number of threads.
class KnowledgeGraph {
  public:
    using Storage = std::map<std::string, Triple>;
    using const_iterator = Storage::const_iterator;

    KnowledgeGraph() = default;
    explicit KnowledgeGraph(const std::vector<Triple>& triples);

    // Returns false if the triple was already present.
    bool insert(Triple t);
    // Returns false if the triple was absent.
    bool erase(const Triple& t);

    bool contains(const Triple& t) const;
    bool contains_line(const std::string& canonical) const { return triples_.count(canonical) > 0; }

    std::size_t triple_count() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }

    const_iterator begin() const { return triples_.begin(); }
    const_iterator end() const { return triples_.end(); }

    std::vector<Triple> triples() const;

    friend bool operator==(const KnowledgeGraph& a, const KnowledgeGraph& b);

  private:
    Storage triples_;
};

}  // namespace dltbench::rdf
