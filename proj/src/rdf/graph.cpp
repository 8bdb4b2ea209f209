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

#include <dltbench/rdf/graph.hpp>

namespace dltbench::rdf {

KnowledgeGraph::KnowledgeGraph(const std::vector<Triple>& triples) {
    for (const Triple& t : triples) {
        insert(t);
    }
}

bool KnowledgeGraph::insert(Triple t) {
    std::string key = t.canonical_line();
    return triples_.emplace(std::move(key), std::move(t)).second;
}

bool KnowledgeGraph::erase(const Triple& t) {
    return triples_.erase(t.canonical_line()) > 0;
}

bool KnowledgeGraph::contains(const Triple& t) const {
    return triples_.count(t.canonical_line()) > 0;
}

std::vector<Triple> KnowledgeGraph::triples() const {
    std::vector<Triple> out;
    out.reserve(triples_.size());
    for (const auto& [line, t] : triples_) {
        out.push_back(t);
    }
    return out;
}

bool operator==(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    if (a.triples_.size() != b.triples_.size()) {
        return false;
    }
    auto ita = a.triples_.begin();
    auto itb = b.triples_.begin();
    for (; ita != a.triples_.end(); ++ita, ++itb) {
        if (ita->first != itb->first) {
            return false;
        }
    }
    return true;
}

}  // namespace dltbench::rdf
