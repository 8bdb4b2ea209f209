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

#include <dltbench/rdf/diff.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace dltbench::rdf {

namespace {

// (subject, predicate) key in N-Triples surface form; '\x1f' cannot occur
// in a serialized term.
std::string sp_key(const Triple& t) {
    std::string key = t.subject().nt();
    key.push_back('\x1f');
    key += t.predicate().nt();
    return key;
}

struct KeyObjects {
    std::vector<const Triple*> old_side;
    std::vector<const Triple*> new_side;
};

}  // namespace

KGDiff diff(const KnowledgeGraph& old_graph, const KnowledgeGraph& new_graph) {
    KGDiff out;

    // Object multiplicity per (subject, predicate) key over the whole graph;
    // the update rule requires exactly one object on each side.
    std::unordered_map<std::string, std::size_t> old_counts;
    std::unordered_map<std::string, std::size_t> new_counts;
    for (const auto& [line, t] : old_graph) {
        (void)line;
        ++old_counts[sp_key(t)];
    }
    for (const auto& [line, t] : new_graph) {
        (void)line;
        ++new_counts[sp_key(t)];
    }

    std::unordered_map<std::string, KeyObjects> changed;
    for (const auto& [line, t] : old_graph) {
        if (!new_graph.contains_line(line)) {
            changed[sp_key(t)].old_side.push_back(&t);
        }
    }
    for (const auto& [line, t] : new_graph) {
        if (!old_graph.contains_line(line)) {
            changed[sp_key(t)].new_side.push_back(&t);
        }
    }

    for (auto& [key, objs] : changed) {
        bool update = old_counts[key] == 1 && new_counts[key] == 1 &&
                      objs.old_side.size() == 1 && objs.new_side.size() == 1;
        if (update) {
            out.updated.emplace_back(*objs.old_side.front(), *objs.new_side.front());
        } else {
            for (const Triple* t : objs.old_side) {
                out.deleted.push_back(*t);
            }
            for (const Triple* t : objs.new_side) {
                out.added.push_back(*t);
            }
        }
    }

    auto by_line = [](const Triple& a, const Triple& b) { return a.canonical_line() < b.canonical_line(); };
    std::sort(out.added.begin(), out.added.end(), by_line);
    std::sort(out.deleted.begin(), out.deleted.end(), by_line);
    std::sort(out.updated.begin(), out.updated.end(), [](const auto& a, const auto& b) {
        return a.first.canonical_line() < b.first.canonical_line();
    });
    return out;
}

KnowledgeGraph apply_diff(const KnowledgeGraph& graph, const KGDiff& d) {
    KnowledgeGraph out = graph;
    for (const Triple& t : d.deleted) {
        if (!out.erase(t)) {
            throw std::invalid_argument("apply_diff: deleted triple not present: " + t.canonical_line());
        }
    }
    for (const auto& [old_t, new_t] : d.updated) {
        if (!out.erase(old_t)) {
            throw std::invalid_argument("apply_diff: update-old triple not present: " + old_t.canonical_line());
        }
        out.insert(new_t);
    }
    for (const Triple& t : d.added) {
        if (!out.insert(t)) {
            throw std::invalid_argument("apply_diff: added triple already present: " + t.canonical_line());
        }
    }
    return out;
}

}  // namespace dltbench::rdf
