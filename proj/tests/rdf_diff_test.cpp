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

#include <catch2/catch_amalgamated.hpp>

#include <dltbench/rdf/diff.hpp>

#include "support/generators.hpp"

using namespace dltbench;
using namespace dltbench::rdf;

namespace {

Triple spo(const std::string& s, const std::string& p, const std::string& o) {
    return make_iri_triple("http://x/" + s, "http://x/" + p, "http://x/" + o);
}

}  // namespace

TEST_CASE("identical graphs yield an empty diff") {
    KnowledgeGraph g{{spo("s", "p", "a"), spo("s", "q", "b")}};
    KGDiff d = diff(g, g);
    CHECK(d.empty());
}

TEST_CASE("single-object key with changed object becomes an update") {
    KnowledgeGraph old_g{{spo("s", "p", "a")}};
    KnowledgeGraph new_g{{spo("s", "p", "b")}};
    KGDiff d = diff(old_g, new_g);
    CHECK(d.added.empty());
    CHECK(d.deleted.empty());
    REQUIRE(d.updated.size() == 1);
    CHECK(d.updated[0].first == spo("s", "p", "a"));
    CHECK(d.updated[0].second == spo("s", "p", "b"));
}

TEST_CASE("multi-valued keys fall back to add and delete") {
    KnowledgeGraph old_g{{spo("s", "p", "a"), spo("s", "p", "b")}};
    KnowledgeGraph new_g{{spo("s", "p", "a"), spo("s", "p", "c")}};
    KGDiff d = diff(old_g, new_g);
    CHECK(d.updated.empty());
    REQUIRE(d.deleted.size() == 1);
    CHECK(d.deleted[0] == spo("s", "p", "b"));
    REQUIRE(d.added.size() == 1);
    CHECK(d.added[0] == spo("s", "p", "c"));
}

TEST_CASE("pairing requires a single object on both sides") {
    // Old side single, new side multi: no update pair.
    KnowledgeGraph old_g{{spo("s", "p", "a")}};
    KnowledgeGraph new_g{{spo("s", "p", "b"), spo("s", "p", "c")}};
    KGDiff d = diff(old_g, new_g);
    CHECK(d.updated.empty());
    CHECK(d.deleted.size() == 1);
    CHECK(d.added.size() == 2);
}

TEST_CASE("updated pairs share subject and predicate and differ in object") {
    test::Rng rng{0x5eed0002};
    for (int round = 0; round < 50; ++round) {
        KnowledgeGraph old_g;
        KnowledgeGraph new_g;
        for (int i = 0; i < 60; ++i) {
            Triple t = rng.random_triple();
            if (rng.chance(0.5)) {
                old_g.insert(t);
            }
            if (rng.chance(0.5)) {
                new_g.insert(t);
            }
            if (rng.chance(0.3)) {
                // same key, different object
                new_g.insert(Triple{t.subject(), t.predicate(), rng.random_object()});
            }
        }
        KGDiff d = diff(old_g, new_g);
        for (const auto& [old_t, new_t] : d.updated) {
            CHECK(old_t.subject() == new_t.subject());
            CHECK(old_t.predicate() == new_t.predicate());
            CHECK_FALSE(old_t.object() == new_t.object());
        }
        // Disjointness of added / deleted / update-old sides.
        std::set<std::string> seen;
        for (const Triple& t : d.added) {
            CHECK(seen.insert(t.canonical_line()).second);
        }
        for (const Triple& t : d.deleted) {
            CHECK(seen.insert(t.canonical_line()).second);
        }
        for (const auto& [old_t, new_t] : d.updated) {
            (void)new_t;
            CHECK(seen.insert(old_t.canonical_line()).second);
        }
    }
}

TEST_CASE("apply_diff identity and single deletions") {
    KnowledgeGraph g{{spo("s", "p", "a")}};
    CHECK(apply_diff(g, KGDiff{}) == g);

    KGDiff del;
    del.deleted.push_back(spo("s", "p", "a"));
    CHECK(apply_diff(g, del).triple_count() == 0);
}

TEST_CASE("apply_diff rejects precondition violations and names the triple") {
    KnowledgeGraph g{{spo("s", "p", "a")}};

    KGDiff missing_delete;
    missing_delete.deleted.push_back(spo("s", "p", "zzz"));
    CHECK_THROWS_WITH(apply_diff(g, missing_delete), Catch::Matchers::ContainsSubstring("zzz"));

    KGDiff missing_update;
    missing_update.updated.emplace_back(spo("s", "p", "zzz"), spo("s", "p", "b"));
    CHECK_THROWS_AS(apply_diff(g, missing_update), std::invalid_argument);

    KGDiff dup_add;
    dup_add.added.push_back(spo("s", "p", "a"));
    CHECK_THROWS_AS(apply_diff(g, dup_add), std::invalid_argument);
}

TEST_CASE("diff soundness: apply_diff(old, diff(old, new)) == new on randomized pairs") {
    test::Rng rng{0x5eed0003};
    for (int round = 0; round < 40; ++round) {
        KnowledgeGraph old_g;
        KnowledgeGraph new_g;
        // Overlapping random graphs of up to ~500 triples each.
        for (int i = 0; i < 500; ++i) {
            Triple t = rng.random_triple();
            if (rng.chance(0.6)) {
                old_g.insert(t);
            }
            if (rng.chance(0.6)) {
                new_g.insert(t);
            }
        }
        KGDiff d = diff(old_g, new_g);
        CHECK(apply_diff(old_g, d) == new_g);
    }
}
