#include <doctest.h>

#include <cstdio>

#include "friendship/hg_io.hpp"

using namespace friendship;

namespace {
Hypergraph sample() {
  return Hypergraph::make(5, 3, {VertexSet::of({0, 1, 2}), VertexSet::of({0, 3, 4}),
                                 VertexSet::of({2, 3, 4})});
}
}  // namespace

TEST_CASE("to_hg emits the canonical text form") {
  CHECK(to_hg(sample()) == "5 3 3\n0 1 2\n0 3 4\n2 3 4\n");
  CHECK(to_hg(sample(), 2) == "5 3 3\n# steiner t=2\n0 1 2\n0 3 4\n2 3 4\n");
  // Canonical order is by raw mask (colex), not lexicographic: {2,3,4} has a
  // smaller mask than {0,3,4}+{5}... spot-check a case where they differ.
  auto h = Hypergraph::make(6, 2, {VertexSet::of({0, 5}), VertexSet::of({3, 4})});
  CHECK(to_hg(h) == "6 2 2\n3 4\n0 5\n");
}

TEST_CASE("parse/serialize round-trips byte for byte") {
  const std::string text = to_hg(sample(), 2);
  HgDocument doc = parse_hg(text);
  CHECK(doc.hypergraph == sample());
  CHECK(doc.steiner_t == 2);
  CHECK(to_hg(doc.hypergraph, doc.steiner_t) == text);
}

TEST_CASE("parser accepts cosmetic variation") {
  // Blank lines, plain comments, CRLF, and tab separators are all tolerated;
  // the annotation may come before the header.
  HgDocument doc = parse_hg("# steiner t=2\n\n5 3 3\r\n0\t1 2\n# note\n0 3 4\n2 3 4");
  CHECK(doc.hypergraph == sample());
  CHECK(doc.steiner_t == 2);
}

TEST_CASE("parser rejects malformed documents with line numbers") {
  CHECK_THROWS_AS(parse_hg(""), ParseError);
  CHECK_THROWS_AS(parse_hg("5 3\n"), ParseError);                     // short header
  CHECK_THROWS_AS(parse_hg("5 3 1 9\n0 1 2\n"), ParseError);          // long header
  CHECK_THROWS_AS(parse_hg("0 1 0\n"), ParseError);                   // n out of range
  CHECK_THROWS_AS(parse_hg("5 6 0\n"), ParseError);                   // r > n
  CHECK_THROWS_AS(parse_hg("5 3 2\n0 1 2\n"), ParseError);            // too few edges
  CHECK_THROWS_AS(parse_hg("5 3 1\n0 1 2\n0 3 4\n"), ParseError);     // too many edges
  CHECK_THROWS_AS(parse_hg("5 3 1\n0 1\n"), ParseError);              // short edge line
  CHECK_THROWS_AS(parse_hg("5 3 1\n0 2 1\n"), ParseError);            // not increasing
  CHECK_THROWS_AS(parse_hg("5 3 1\n0 1 1\n"), ParseError);            // repeated vertex
  CHECK_THROWS_AS(parse_hg("5 3 1\n0 1 5\n"), ParseError);            // vertex >= n
  CHECK_THROWS_AS(parse_hg("5 3 1\n0 1 x\n"), ParseError);            // non-integer
  CHECK_THROWS_AS(parse_hg("5 3 2\n0 1 2\n0 1 2\n"), ParseError);     // duplicate edge
  CHECK_THROWS_AS(parse_hg("5 3 1\n# steiner t=0\n0 1 2\n"), ParseError);
  const std::string msg = [] {
    try {
      parse_hg("5 3 1\n0 2 1\n");
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  }();
  CHECK(msg.find("line 2") != std::string::npos);
}

TEST_CASE("file round-trip preserves the document") {
  const std::string path = "/tmp/fhg_io_roundtrip.hg";
  write_hg_file(path, sample(), 2);
  HgDocument doc = read_hg_file(path);
  CHECK(doc.hypergraph == sample());
  CHECK(doc.steiner_t == 2);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_hg_file("/tmp/definitely_missing_fhg_file.hg"), IoError);
}

TEST_CASE("sha256 matches the published test vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("hypergraph fingerprint hashes the canonical form, annotation excluded") {
  CHECK(hypergraph_sha256(sample()) == sha256_hex(to_hg(sample())));
  CHECK(hypergraph_sha256(sample()) == sha256_hex(to_hg(sample(), std::nullopt)));
  // Same edges given in any order hash identically.
  auto shuffled = Hypergraph::make(
      5, 3, {VertexSet::of({2, 3, 4}), VertexSet::of({0, 1, 2}), VertexSet::of({0, 3, 4})});
  CHECK(hypergraph_sha256(shuffled) == hypergraph_sha256(sample()));
}
