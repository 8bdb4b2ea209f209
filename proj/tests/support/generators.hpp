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

#include <random>
#include <set>
#include <string>
#include <vector>

#include <dltbench/rdf/graph.hpp>
#include <dltbench/rdf/triple.hpp>
#include <dltbench/strategy/triple_op.hpp>

namespace dltbench::test {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    bool chance(double p) { return static_cast<double>(engine_() % 10'000) < p * 10'000.0; }

    std::string ascii_word(std::size_t min_len, std::size_t max_len) {
        static constexpr char kAlphabet[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
        std::size_t len = min_len + below(max_len - min_len + 1);
        std::string out;
        out.reserve(len);
        for (std::size_t i = 0; i < len; ++i) {
            out.push_back(kAlphabet[below(sizeof kAlphabet - 1)]);
        }
        return out;
    }

    // Literal values exercising the escape paths.
    std::string literal_value() {
        std::string out = ascii_word(0, 12);
        if (chance(0.3)) {
            out += "\"quoted\"";
        }
        if (chance(0.3)) {
            out += "\n\tline\\two";
        }
        if (chance(0.2)) {
            out += "caf\xC3\xA9";  // UTF-8 e-acute
        }
        return out;
    }

    rdf::Term random_subject() {
        if (chance(0.15)) {
            return rdf::Term::blank("b" + std::to_string(below(40)));
        }
        return rdf::Term::iri("http://example.org/s/" + ascii_word(1, 10));
    }

    rdf::Term random_predicate() { return rdf::Term::iri("http://example.org/p/" + ascii_word(1, 8)); }

    rdf::Term random_object() {
        switch (below(5)) {
            case 0:
                return rdf::Term::iri("http://example.org/o/" + ascii_word(1, 10));
            case 1:
                return rdf::Term::blank("b" + std::to_string(below(40)));
            case 2:
                return rdf::Term::literal(literal_value(), "en");
            case 3:
                return rdf::Term::literal(literal_value(), {}, "http://www.w3.org/2001/XMLSchema#integer");
            default:
                return rdf::Term::literal(literal_value());
        }
    }

    rdf::Triple random_triple() { return rdf::Triple{random_subject(), random_predicate(), random_object()}; }

  private:
    std::mt19937_64 engine_;
};

// Plain set-of-lines simulation of the op semantics, independent of every
// strategy and of KnowledgeGraph.
class SetSimulation {
  public:
    void apply(const strategy::TripleOp& op) {
        switch (op.kind()) {
            case strategy::OpKind::kInsert:
                lines_.insert(op.triple().canonical_line());
                break;
            case strategy::OpKind::kDelete:
                lines_.erase(op.triple().canonical_line());
                break;
            case strategy::OpKind::kUpdate:
                lines_.erase(op.old_triple().canonical_line());
                lines_.insert(op.new_triple().canonical_line());
                break;
        }
    }

    const std::set<std::string>& lines() const { return lines_; }

    bool matches(const rdf::KnowledgeGraph& graph) const {
        if (graph.triple_count() != lines_.size()) {
            return false;
        }
        auto it = lines_.begin();
        for (const auto& [line, t] : graph) {
            (void)t;
            if (line != *it) {
                return false;
            }
            ++it;
        }
        return true;
    }

  private:
    std::set<std::string> lines_;
};

// Vocabulary-constrained op generator that tracks simulated state so UPDATE
// preconditions hold (old triple present) while still emitting duplicate
// inserts and absent deletes.
class OpSequenceGenerator {
  public:
    OpSequenceGenerator(std::uint64_t seed, std::size_t vocabulary_size)
        : rng_{seed}, vocabulary_size_{vocabulary_size} {}

    rdf::Triple vocab_triple() {
        auto iri = [&](const char* role, std::uint64_t i) {
            return rdf::Term::iri("http://v.example.org/" + std::string{role} + std::to_string(i));
        };
        return rdf::Triple{iri("s", rng_.below(vocabulary_size_)), iri("p", rng_.below(5)),
                           iri("o", rng_.below(vocabulary_size_))};
    }

    std::vector<strategy::TripleOp> sequence(std::size_t length) {
        std::vector<strategy::TripleOp> ops;
        ops.reserve(length);
        std::vector<rdf::Triple> present;
        auto remove_present = [&](const rdf::Triple& t) {
            for (std::size_t i = 0; i < present.size(); ++i) {
                if (present[i] == t) {
                    present[i] = present.back();
                    present.pop_back();
                    return;
                }
            }
        };
        while (ops.size() < length) {
            std::uint64_t roll = rng_.below(10);
            if (roll < 5 || present.empty()) {
                rdf::Triple t = vocab_triple();
                bool already = false;
                for (const rdf::Triple& p : present) {
                    already = already || p == t;
                }
                if (!already) {
                    present.push_back(t);
                }
                ops.push_back(strategy::TripleOp::insert(std::move(t)));
            } else if (roll < 7) {
                // Half the deletes target absent triples.
                if (rng_.chance(0.5)) {
                    rdf::Triple t = present[rng_.below(present.size())];
                    remove_present(t);
                    ops.push_back(strategy::TripleOp::remove(std::move(t)));
                } else {
                    rdf::Triple t = vocab_triple();
                    remove_present(t);
                    ops.push_back(strategy::TripleOp::remove(std::move(t)));
                }
            } else {
                rdf::Triple old_t = present[rng_.below(present.size())];
                rdf::Triple new_t{old_t.subject(), old_t.predicate(),
                                  rdf::Term::iri("http://v.example.org/o" + std::to_string(rng_.below(vocabulary_size_)))};
                remove_present(old_t);
                bool already = false;
                for (const rdf::Triple& p : present) {
                    already = already || p == new_t;
                }
                if (!already) {
                    present.push_back(new_t);
                }
                ops.push_back(strategy::TripleOp::update(std::move(old_t), std::move(new_t)));
            }
        }
        return ops;
    }

  private:
    Rng rng_;
    std::size_t vocabulary_size_;
};

}  // namespace dltbench::test
