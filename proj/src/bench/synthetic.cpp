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

#include <dltbench/bench/synthetic.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

namespace dltbench::bench {

namespace {

constexpr std::string_view kNamespace = "http://kb.example.org/";

// mt19937_64 output is pinned by the standard; reducing with modulo keeps
// the generator portable across standard libraries (the std distributions
// are not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    char letter() { return static_cast<char>('a' + below(26)); }

  private:
    std::mt19937_64 engine_;
};

std::string subject_iri(std::uint64_t index) {
    return std::string{kNamespace} + "e" + std::to_string(index);
}

std::string predicate_iri(std::uint64_t index) {
    return std::string{kNamespace} + "p" + std::to_string(index);
}

// Canonical line length of a triple with a literal object:
// "<s> <p> \"o\" ." costs len(s) + len(p) + len(o) + 10.
constexpr std::uint64_t kLineFraming = 10;

// Line-length target for the i-th triple so the corpus mean is exact:
// lengths alternate between floor(mean) and floor(mean)+1 in a Bresenham
// pattern.
std::uint64_t line_target(double mean, std::uint64_t i) {
    auto lo = static_cast<std::uint64_t>(mean);
    double frac = mean - static_cast<double>(lo);
    auto steps_before = static_cast<std::uint64_t>(frac * static_cast<double>(i));
    auto steps_after = static_cast<std::uint64_t>(frac * static_cast<double>(i + 1));
    return lo + (steps_after - steps_before);
}

std::string padded_object(std::string_view marker, std::uint64_t target_line_chars,
                          std::size_t subject_chars, std::size_t predicate_chars, Rng& rng) {
    std::string object{marker};
    std::uint64_t used = subject_chars + predicate_chars + kLineFraming;
    std::uint64_t object_target = target_line_chars > used + object.size()
                                      ? target_line_chars - used
                                      : object.size();
    while (object.size() < object_target) {
        object.push_back(rng.letter());
    }
    return object;
}

}  // namespace

std::vector<rdf::Triple> synthetic_triples(const SyntheticSpec& spec) {
    if (spec.subject_pool == 0 || spec.predicate_pool == 0) {
        throw std::invalid_argument("synthetic pools must be non-empty");
    }
    Rng rng{spec.seed};
    std::vector<rdf::Triple> triples;
    triples.reserve(spec.triple_count);
    for (std::uint64_t i = 0; i < spec.triple_count; ++i) {
        std::string subject = subject_iri(rng.below(spec.subject_pool));
        std::string predicate = predicate_iri(rng.below(spec.predicate_pool));
        // The marker embeds the index, so the corpus never repeats a triple.
        std::string marker = "t" + std::to_string(i) + "-";
        std::string object =
            padded_object(marker, line_target(spec.mean_line_chars, i), subject.size(),
                          predicate.size(), rng);
        triples.emplace_back(rdf::Term::iri(std::move(subject)), rdf::Term::iri(std::move(predicate)),
                             rdf::Term::literal(std::move(object)));
    }
    return triples;
}

GraphPair synthetic_graph_pair(const GraphPairSpec& spec) {
    Rng rng{spec.seed};

    // Unique subjects make every (subject, predicate) key single-valued.
    std::vector<rdf::Triple> base;
    base.reserve(spec.base_triples);
    for (std::uint64_t i = 0; i < spec.base_triples; ++i) {
        std::string subject = subject_iri(i);
        std::string predicate = predicate_iri(rng.below(25));
        std::string marker = "v" + std::to_string(i) + "-";
        std::string object = padded_object(marker, line_target(spec.mean_line_chars, i),
                                           subject.size(), predicate.size(), rng);
        base.emplace_back(rdf::Term::iri(std::move(subject)), rdf::Term::iri(std::move(predicate)),
                          rdf::Term::literal(std::move(object)));
    }

    auto count = [&](double fraction) {
        return static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(spec.base_triples)));
    };
    std::uint64_t to_delete = count(spec.deleted_fraction);
    std::uint64_t to_update = count(spec.updated_fraction);
    std::uint64_t to_add = count(spec.added_fraction);
    if (to_delete + to_update > spec.base_triples) {
        throw std::invalid_argument("deleted_fraction + updated_fraction exceeds 1");
    }

    // Deterministic shuffle picks which base triples change.
    std::vector<std::uint64_t> order(spec.base_triples);
    for (std::uint64_t i = 0; i < spec.base_triples; ++i) {
        order[i] = i;
    }
    for (std::uint64_t i = spec.base_triples; i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }

    GraphPair pair;
    pair.v1 = rdf::KnowledgeGraph{base};
    pair.v2 = pair.v1;
    pair.deleted = to_delete;
    pair.updated = to_update;
    pair.added = to_add;

    std::uint64_t cursor = 0;
    for (std::uint64_t k = 0; k < to_delete; ++k) {
        pair.v2.erase(base[order[cursor++]]);
    }
    for (std::uint64_t k = 0; k < to_update; ++k) {
        const rdf::Triple& old_t = base[order[cursor++]];
        // Same length, different content: flip the marker prefix.
        std::string new_object = old_t.object().value();
        new_object[0] = 'u';
        rdf::Triple new_t{old_t.subject(), old_t.predicate(), rdf::Term::literal(std::move(new_object))};
        pair.v2.erase(old_t);
        pair.v2.insert(new_t);
    }
    for (std::uint64_t k = 0; k < to_add; ++k) {
        std::uint64_t i = spec.base_triples + k;
        std::string subject = subject_iri(i);
        std::string predicate = predicate_iri(rng.below(25));
        std::string marker = "a" + std::to_string(i) + "-";
        std::string object = padded_object(marker, line_target(spec.mean_line_chars, i),
                                           subject.size(), predicate.size(), rng);
        pair.v2.insert(rdf::Triple{rdf::Term::iri(std::move(subject)),
                                   rdf::Term::iri(std::move(predicate)),
                                   rdf::Term::literal(std::move(object))});
    }
    return pair;
}

std::string to_ntriples_document(std::span<const rdf::Triple> triples) {
    std::string out;
    for (const rdf::Triple& t : triples) {
        out += t.canonical_line();
        out.push_back('\n');
    }
    return out;
}

}  // namespace dltbench::bench
