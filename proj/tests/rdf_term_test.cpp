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

#include <dltbench/rdf/graph.hpp>
#include <dltbench/rdf/triple.hpp>

using namespace dltbench::rdf;

TEST_CASE("canonical line of an all-IRI triple") {
    Triple t = make_iri_triple("http://a", "http://b", "http://c");
    CHECK(t.canonical_line() == "<http://a> <http://b> <http://c> .");
}

TEST_CASE("canonical line of a language-tagged literal") {
    Triple t{Term::iri("http://a"), Term::iri("http://b"), Term::literal("hi", "en")};
    CHECK(t.canonical_line() == "<http://a> <http://b> \"hi\"@en .");
}

TEST_CASE("language tags are lowercased") {
    CHECK(Term::literal("x", "EN-Latn").nt() == "\"x\"@en-latn");
}

TEST_CASE("xsd:string datatype collapses to a plain literal") {
    Term typed = Term::literal("x", {}, "http://www.w3.org/2001/XMLSchema#string");
    Term plain = Term::literal("x");
    CHECK(typed == plain);
    CHECK(typed.nt() == "\"x\"");
}

TEST_CASE("literal escaping covers the control set") {
    Term t = Term::literal("a\"b\\c\nd\re\tf");
    CHECK(t.nt() == "\"a\\\"b\\\\c\\nd\\re\\tf\"");
}

TEST_CASE("term validation") {
    CHECK_THROWS_AS(Term::iri(""), std::invalid_argument);
    CHECK_THROWS_AS(Term::iri("has space"), std::invalid_argument);
    CHECK_THROWS_AS(Term::iri("angle<bracket"), std::invalid_argument);
    CHECK_THROWS_AS(Term::blank(""), std::invalid_argument);
    CHECK_THROWS_AS(Term::blank("ends."), std::invalid_argument);
    CHECK_THROWS_AS(Term::literal("x", "en", "http://dt"), std::invalid_argument);
    CHECK_THROWS_AS(Term::literal("x", "1x"), std::invalid_argument);
}

TEST_CASE("triple validation") {
    CHECK_THROWS_AS(Triple(Term::literal("x"), Term::iri("http://p"), Term::iri("http://o")),
                    std::invalid_argument);
    CHECK_THROWS_AS(Triple(Term::iri("http://s"), Term::blank("b"), Term::iri("http://o")),
                    std::invalid_argument);
    CHECK_NOTHROW(Triple(Term::blank("b1"), Term::iri("http://p"), Term::literal("v")));
}

TEST_CASE("graph set semantics: duplicate insert never changes triple_count") {
    KnowledgeGraph g;
    Triple t = make_iri_triple("http://s", "http://p", "http://o");
    CHECK(g.insert(t));
    CHECK(g.triple_count() == 1);
    CHECK_FALSE(g.insert(t));
    CHECK(g.triple_count() == 1);
    CHECK(g.erase(t));
    CHECK(g.triple_count() == 0);
    CHECK_FALSE(g.erase(t));
}

TEST_CASE("graph equality is set equality") {
    Triple a = make_iri_triple("http://s", "http://p", "http://a");
    Triple b = make_iri_triple("http://s", "http://p", "http://b");
    KnowledgeGraph g1{{a, b}};
    KnowledgeGraph g2{{b, a, a}};
    CHECK(g1 == g2);
    g2.erase(a);
    CHECK_FALSE(g1 == g2);
}
