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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <dltbench/rdf/diff.hpp>
#include <dltbench/rdf/graph.hpp>
#include <dltbench/rdf/triple.hpp>

namespace dltbench::bench {

// Deterministic synthetic knowledge graph generator: identical parameters
// produce identical triples on any platform. Canonical line lengths are
// padded so the corpus hits `mean_line_chars` exactly on average (lengths
// alternate between floor and ceil).
struct SyntheticSpec {
    std::uint64_t triple_count{10'000};
    std::uint64_t seed{42};
    double mean_line_chars{130.56};
    std::uint64_t subject_pool{500};
    std::uint64_t predicate_pool{25};
};

std::vector<rdf::Triple> synthetic_triples(const SyntheticSpec& spec);

// Two graph versions with a known amount of change between them. Every
// (subject, predicate) key is single-valued, so diff() recovers exactly the
// generated add/update/delete counts.
struct GraphPairSpec {
    std::uint64_t base_triples{1'000};
    std::uint64_t seed{42};
    double added_fraction{0.12};
    double updated_fraction{0.08};
    double deleted_fraction{0.10};
    double mean_line_chars{130.56};
};

struct GraphPair {
    rdf::KnowledgeGraph v1;
    rdf::KnowledgeGraph v2;
    std::uint64_t added{0};
    std::uint64_t updated{0};
    std::uint64_t deleted{0};
};

GraphPair synthetic_graph_pair(const GraphPairSpec& spec);

// Document-order N-Triples serialization (one line per triple).
std::string to_ntriples_document(std::span<const rdf::Triple> triples);

}  // namespace dltbench::bench
