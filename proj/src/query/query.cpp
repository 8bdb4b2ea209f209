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

#include <dltbench/query/query.hpp>

#include <algorithm>

namespace dltbench::query {

namespace {

void sort_by_line(std::vector<rdf::Triple>& triples) {
    std::sort(triples.begin(), triples.end(), [](const rdf::Triple& a, const rdf::Triple& b) {
        return a.canonical_line() < b.canonical_line();
    });
}

}  // namespace

std::vector<rdf::Triple> match_pattern(const rdf::KnowledgeGraph& g, const TriplePattern& p) {
    // Graph iteration is already canonical-line ordered.
    std::vector<rdf::Triple> out;
    for (const auto& [line, t] : g) {
        (void)line;
        if (p.matches(t)) {
            out.push_back(t);
        }
    }
    return out;
}

std::string export_ntriples(const rdf::KnowledgeGraph& g) {
    std::string out;
    for (const auto& [line, t] : g) {
        (void)t;
        out += line;
        out.push_back('\n');
    }
    return out;
}

QueryIndex::QueryIndex(const rdf::KnowledgeGraph& graph) : graph_{graph} {
    for (const auto& [line, t] : graph_) {
        (void)line;
        by_subject_[t.subject().nt()].push_back(&t);
        by_predicate_[t.predicate().nt()].push_back(&t);
        by_object_[t.object().nt()].push_back(&t);
    }
}

std::vector<rdf::Triple> QueryIndex::match(const TriplePattern& p) const {
    const std::vector<const rdf::Triple*>* candidates = nullptr;
    if (p.subject) {
        auto it = by_subject_.find(p.subject->nt());
        if (it == by_subject_.end()) {
            return {};
        }
        candidates = &it->second;
    } else if (p.object) {
        auto it = by_object_.find(p.object->nt());
        if (it == by_object_.end()) {
            return {};
        }
        candidates = &it->second;
    } else if (p.predicate) {
        auto it = by_predicate_.find(p.predicate->nt());
        if (it == by_predicate_.end()) {
            return {};
        }
        candidates = &it->second;
    }

    if (candidates == nullptr) {
        return match_pattern(graph_, p);
    }
    std::vector<rdf::Triple> out;
    for (const rdf::Triple* t : *candidates) {
        if (p.matches(*t)) {
            out.push_back(*t);
        }
    }
    sort_by_line(out);
    return out;
}

}  // namespace dltbench::query
