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

#include <utility>
#include <vector>

#include <dltbench/rdf/graph.hpp>

namespace dltbench::rdf {

// Change set between two graph versions. An updated pair keeps the subject
// and predicate and replaces the object; added/deleted/update-old sides are
// pairwise disjoint. Members are kept sorted by canonical line.
struct KGDiff {
    std::vector<Triple> added;
    std::vector<std::pair<Triple, Triple>> updated;  // (old, new)
    std::vector<Triple> deleted;

    bool empty() const { return added.empty() && updated.empty() && deleted.empty(); }
    std::size_t op_count() const { return added.size() + updated.size() + deleted.size(); }
};

// Classifies the change from `old_graph` to `new_graph`. A (subject,
// predicate) key carrying exactly one object on each side, with differing
// objects, becomes an updated pair; every other difference is an add or a
// delete. Multi-valued keys never produce updates, which keeps the
// classification order-independent.
KGDiff diff(const KnowledgeGraph& old_graph, const KnowledgeGraph& new_graph);

// Applies a diff: removes deleted and update-old triples, inserts added and
// update-new triples. Throws std::invalid_argument naming the offending
// triple when a deleted/update-old triple is absent or an added triple is
// already present.
KnowledgeGraph apply_diff(const KnowledgeGraph& graph, const KGDiff& d);

}  // namespace dltbench::rdf
