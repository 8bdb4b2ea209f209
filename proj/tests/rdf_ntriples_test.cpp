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

#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include <dltbench/rdf/parse.hpp>

#include "support/generators.hpp"

using namespace dltbench;
using namespace dltbench::rdf;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in{std::string{DLTBENCH_FIXTURE_DIR} + "/" + name, std::ios::binary};
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
}

}  // namespace

TEST_CASE("single statement") {
    auto triples = parse_ntriples("<http://a> <http://b> <http://c> .");
    REQUIRE(triples.size() == 1);
    CHECK(triples[0] == make_iri_triple("http://a", "http://b", "http://c"));
}

TEST_CASE("empty document") {
    CHECK(parse_ntriples("").empty());
    CHECK(parse_ntriples("\n\n# only a comment\n").empty());
}

TEST_CASE("duplicate lines produce duplicate entries") {
    auto triples = parse_ntriples("<http://a> <http://b> <http://c> .\n<http://a> <http://b> <http://c> .\n");
    CHECK(triples.size() == 2);
}

TEST_CASE("literals, blank nodes and datatypes") {
    auto triples = parse_ntriples(
        "_:b1 <http://p> \"a\\nb\\\"c\" .\n"
        "<http://s> <http://p> \"chat\"@FR .\n"
        "<http://s> <http://p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
        "<http://s> <http://p> \"\\u00E9t\\u00E9\" .\n");
    REQUIRE(triples.size() == 4);
    CHECK(triples[0].subject().is_blank());
    CHECK(triples[0].object().value() == "a\nb\"c");
    CHECK(triples[1].object().language() == "fr");
    CHECK(triples[2].object().datatype() == "http://www.w3.org/2001/XMLSchema#integer");
    CHECK(triples[3].object().value() == "\xC3\xA9t\xC3\xA9");
}

TEST_CASE("syntax errors carry the line number") {
    try {
        parse_ntriples("<http://a> <http://b> <http://c> .\n<http://a> <http://b> nonsense .\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_ntriples("<http://a> <http://b> <http://c>"), ParseError);  // missing dot
    CHECK_THROWS_AS(parse_ntriples("<http://a> <http://b> ."), ParseError);           // missing object
    CHECK_THROWS_AS(parse_ntriples("\"lit\" <http://p> <http://o> ."), ParseError);   // literal subject
    CHECK_THROWS_AS(parse_ntriples("<http://s> _:b <http://o> ."), ParseError);       // blank predicate
}

TEST_CASE("non-UTF-8 input is rejected with a line number") {
    std::string bad = "<http://a> <http://b> <http://c> .\n<http://s> <http://p> \"\xFF\xFE\" .\n";
    try {
        parse_ntriples(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("100-line fixture matches the reference parser output") {
    auto triples = parse_ntriples(read_fixture("simple100.nt"));
    REQUIRE(triples.size() == 100);

    std::string expected = read_fixture("simple100_expected.nt");
    std::string actual;
    for (const Triple& t : triples) {
        actual += t.canonical_line();
        actual.push_back('\n');
    }
    CHECK(actual == expected);
}

TEST_CASE("round-trip: parse(canonical_line(t)) == [t] for random triples") {
    test::Rng rng{0x5eed0001};
    for (int i = 0; i < 1'000; ++i) {
        Triple t = rng.random_triple();
        auto parsed = parse_ntriples(t.canonical_line());
        REQUIRE(parsed.size() == 1);
        CHECK(parsed[0] == t);
        CHECK(parsed[0].canonical_line() == t.canonical_line());
    }
}
