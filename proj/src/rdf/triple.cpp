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

#include <dltbench/rdf/triple.hpp>

#include <stdexcept>
#include <utility>

namespace dltbench::rdf {

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_{std::move(subject)}, predicate_{std::move(predicate)}, object_{std::move(object)} {
    if (subject_.is_literal()) {
        throw std::invalid_argument("triple subject cannot be a literal");
    }
    if (!predicate_.is_iri()) {
        throw std::invalid_argument("triple predicate must be an IRI");
    }
}

std::string Triple::canonical_line() const {
    std::string out;
    out.reserve(subject_.value().size() + predicate_.value().size() + object_.value().size() + 16);
    subject_.append_nt(out);
    out.push_back(' ');
    predicate_.append_nt(out);
    out.push_back(' ');
    object_.append_nt(out);
    out += " .";
    return out;
}

Triple make_iri_triple(std::string subject, std::string predicate, std::string object) {
    return Triple{Term::iri(std::move(subject)), Term::iri(std::move(predicate)), Term::iri(std::move(object))};
}

std::string canonical_line(const Triple& t) {
    return t.canonical_line();
}

}  // namespace dltbench::rdf
