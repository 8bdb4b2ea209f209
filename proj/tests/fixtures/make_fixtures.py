#!/usr/bin/env python3
# Copyright 2026 The dltbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates parser fixtures and their expected output.

The expected output is produced by the reference parsers below, written
directly from the N-Triples / Turtle grammars and kept independent of the
C++ implementation. Run once; the generated files are committed.
"""

import random
import re
from pathlib import Path

HERE = Path(__file__).parent

XSD_STRING = "http://www.w3.org/2001/XMLSchema#string"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"


# --------------------------------------------------------------- canonical --

def escape_literal(value: str) -> str:
    out = []
    table = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\r": "\\r",
             "\t": "\\t", "\b": "\\b", "\f": "\\f"}
    for ch in value:
        out.append(table.get(ch, ch))
    return "".join(out)


def term_nt(term) -> str:
    kind, value, lang, datatype = term
    if kind == "iri":
        return f"<{value}>"
    if kind == "blank":
        return f"_:{value}"
    body = f'"{escape_literal(value)}"'
    if lang:
        return f"{body}@{lang.lower()}"
    if datatype and datatype != XSD_STRING:
        return f"{body}^^<{datatype}>"
    return body


def canonical_line(triple) -> str:
    s, p, o = triple
    return f"{term_nt(s)} {term_nt(p)} {term_nt(o)} ."


# ------------------------------------------------------- reference parsing --

UNESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
             '"': '"', "'": "'", "\\": "\\"}


def unescape(raw: str) -> str:
    out = []
    i = 0
    while i < len(raw):
        ch = raw[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        esc = raw[i + 1]
        if esc in UNESCAPES:
            out.append(UNESCAPES[esc])
            i += 2
        elif esc == "u":
            out.append(chr(int(raw[i + 2:i + 6], 16)))
            i += 6
        elif esc == "U":
            out.append(chr(int(raw[i + 2:i + 10], 16)))
            i += 10
        else:
            raise ValueError(f"bad escape \\{esc}")
    return "".join(out)


class Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def eof(self):
        return self.pos >= len(self.text)

    def peek(self):
        return self.text[self.pos] if not self.eof() else ""

    def skip_ws(self, newlines=True):
        while not self.eof():
            ch = self.peek()
            if ch == "#":
                while not self.eof() and self.peek() != "\n":
                    self.pos += 1
            elif ch in " \t\r" or (newlines and ch == "\n"):
                self.pos += 1
            else:
                break

    def expect(self, ch):
        if self.peek() != ch:
            raise ValueError(f"expected {ch!r} at offset {self.pos}")
        self.pos += 1

    def iriref(self):
        self.expect("<")
        end = self.text.index(">", self.pos)
        raw = self.text[self.pos:end]
        self.pos = end + 1
        return ("iri", unescape(raw), None, None)

    def blank(self):
        self.expect("_")
        self.expect(":")
        m = re.match(r"[A-Za-z0-9_][A-Za-z0-9_.-]*", self.text[self.pos:])
        label = m.group(0).rstrip(".")
        self.pos += len(label)
        return ("blank", label, None, None)

    def string_body(self):
        quote = self.peek()
        if self.text.startswith(quote * 3, self.pos):
            self.pos += 3
            end = self.text.index(quote * 3, self.pos)
            raw = self.text[self.pos:end]
            self.pos = end + 3
            return unescape(raw)
        self.pos += 1
        out = []
        while True:
            ch = self.text[self.pos]
            if ch == "\\":
                out.append(self.text[self.pos:self.pos + 2])
                self.pos += 2
                continue
            if ch == quote:
                self.pos += 1
                return unescape("".join(out))
            out.append(ch)
            self.pos += 1

    def literal(self, resolve):
        value = self.string_body()
        if self.peek() == "@":
            self.pos += 1
            m = re.match(r"[A-Za-z0-9-]+", self.text[self.pos:])
            lang = m.group(0)
            self.pos += len(lang)
            return ("literal", value, lang, None)
        if self.text.startswith("^^", self.pos):
            self.pos += 2
            self.skip_ws()
            if self.peek() == "<":
                dt = self.iriref()[1]
            else:
                dt = resolve(self.pname())[1]
            return ("literal", value, None, dt)
        return ("literal", value, None, None)

    def pname(self):
        m = re.match(r"[A-Za-z0-9_\-.%:]+", self.text[self.pos:])
        token = m.group(0).rstrip(".")
        self.pos += len(token)
        return token


def parse_ntriples_ref(text: str):
    triples = []
    for line in text.split("\n"):
        sc = Scanner(line)
        sc.skip_ws()
        if sc.eof() or sc.peek() == "#":
            continue

        def term(allow_literal):
            sc.skip_ws()
            ch = sc.peek()
            if ch == "<":
                return sc.iriref()
            if ch == "_":
                return sc.blank()
            if ch == '"' and allow_literal:
                return sc.literal(None)
            raise ValueError(f"unexpected {ch!r}")

        s = term(False)
        p = term(False)
        o = term(True)
        sc.skip_ws()
        sc.expect(".")
        triples.append((s, p, o))
    return triples


def parse_turtle_ref(text: str):
    sc = Scanner(text)
    prefixes = {}
    triples = []

    def resolve(token):
        prefix, _, local = token.partition(":")
        return ("iri", prefixes[prefix] + local, None, None)

    def subject():
        sc.skip_ws()
        ch = sc.peek()
        if ch == "<":
            return sc.iriref()
        if ch == "_":
            return sc.blank()
        return resolve(sc.pname())

    def verb():
        sc.skip_ws()
        if sc.peek() == "<":
            return sc.iriref()
        token = sc.pname()
        if token == "a":
            return ("iri", RDF_TYPE, None, None)
        return resolve(token)

    def obj():
        sc.skip_ws()
        ch = sc.peek()
        if ch == "<":
            return sc.iriref()
        if ch == "_":
            return sc.blank()
        if ch in "\"'":
            return sc.literal(resolve)
        return resolve(sc.pname())

    while True:
        sc.skip_ws()
        if sc.eof():
            break
        if sc.text.startswith("@prefix", sc.pos):
            sc.pos += len("@prefix")
            sc.skip_ws()
            name = sc.pname() if sc.peek() != ":" else ""
            if sc.peek() == ":":
                sc.pos += 1
            if name.endswith(":"):
                name = name[:-1]
            sc.skip_ws()
            iri = sc.iriref()[1]
            sc.skip_ws()
            sc.expect(".")
            prefixes[name] = iri
            continue
        s = subject()
        while True:
            p = verb()
            while True:
                o = obj()
                triples.append((s, p, o))
                sc.skip_ws()
                if sc.peek() == ",":
                    sc.pos += 1
                    continue
                break
            sc.skip_ws()
            if sc.peek() == ";":
                sc.pos += 1
                sc.skip_ws()
                if sc.peek() in ".;":
                    while sc.peek() == ";":
                        sc.pos += 1
                        sc.skip_ws()
                    break
                continue
            break
        sc.skip_ws()
        sc.expect(".")
    return triples


# ------------------------------------------------------------- generation --

def make_ntriples_fixture(rng):
    lines = []
    for i in range(100):
        kind = i % 5
        s = f"<http://data.example.com/node/{rng.randrange(500)}>" if kind != 3 else f"_:gen{i}"
        p = f"<http://data.example.com/prop/{rng.randrange(40)}>"
        if kind == 0:
            o = f"<http://data.example.com/node/{rng.randrange(500)}>"
        elif kind == 1:
            o = f'"label {i} with \\"quotes\\" and \\t tab"'
        elif kind == 2:
            o = f'"texte num\\u00E9ro {i}"@fr'
        elif kind == 3:
            o = f'"{i}"^^<http://www.w3.org/2001/XMLSchema#integer>'
        else:
            o = f"_:gen{rng.randrange(100)}"
        lines.append(f"{s} {p} {o} .")
    return "\n".join(lines) + "\n"


TTL_CLASSES = ["Person", "City", "Concept", "Organization", "Event"]
TTL_PROPS = ["prefLabel", "altLabel", "definition", "broader", "narrower", "related"]


def make_turtle_fixture(rng):
    out = [
        "@prefix kko: <http://kbpedia.org/ontologies/kko#> .",
        "@prefix rc: <http://kbpedia.org/kko/rc/> .",
        "@prefix skos: <http://www.w3.org/2004/02/skos/core#> .",
        "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .",
        "",
    ]
    emitted = 0
    i = 0
    while emitted < 1000:
        i += 1
        subject = f"rc:Entity{i}"
        parts = [f"{subject} a kko:{TTL_CLASSES[rng.randrange(len(TTL_CLASSES))]}"]
        emitted += 1
        n_props = rng.randrange(1, 4)
        for _ in range(n_props):
            prop = TTL_PROPS[rng.randrange(len(TTL_PROPS))]
            style = rng.randrange(4)
            if style == 0:
                values = ", ".join(f'"label {i}-{k}"@en' for k in range(rng.randrange(1, 3)))
                emitted += values.count(",") + 1
            elif style == 1:
                values = f'"note num\\u00E9ro {i}"'
                emitted += 1
            elif style == 2:
                values = f'"{rng.randrange(2000)}"^^xsd:integer'
                emitted += 1
            else:
                values = f"rc:Entity{rng.randrange(1, 1200)}"
                emitted += 1
            parts.append(f"    skos:{prop} {values}")
        out.append(" ;\n".join(parts) + " .")
    out.append("")
    return "\n".join(out)


def main():
    rng = random.Random(20260810)

    nt_doc = make_ntriples_fixture(rng)
    (HERE / "simple100.nt").write_text(nt_doc, encoding="utf-8")
    expected = [canonical_line(t) for t in parse_ntriples_ref(nt_doc)]
    (HERE / "simple100_expected.nt").write_text("\n".join(expected) + "\n", encoding="utf-8")

    ttl_doc = make_turtle_fixture(rng)
    (HERE / "kbpedia_style.ttl").write_text(ttl_doc, encoding="utf-8")
    ttl_triples = parse_turtle_ref(ttl_doc)
    ttl_expected = sorted(set(canonical_line(t) for t in ttl_triples))
    (HERE / "kbpedia_style_expected.nt").write_text("\n".join(ttl_expected) + "\n", encoding="utf-8")
    print(f"simple100.nt: {len(expected)} triples")
    print(f"kbpedia_style.ttl: {len(ttl_triples)} statements, {len(ttl_expected)} distinct")


if __name__ == "__main__":
    main()
