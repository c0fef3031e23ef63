#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "mereo/enumerate.hpp"
#include "mereo/fixtures.hpp"
#include "mereo/model_io.hpp"

using namespace mereo;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ErrorKind kind_of_parse_failure(const std::string& text) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    return e.kind;
  }
  FAIL("expected a parse failure");
  return ErrorKind::parse;
}

}  // namespace

TEST_CASE("parse a part document") {
  auto doc = parse_model(
      "# comment line\n"
      "kind part\n"
      "name tiny\n"
      "elements a b\n"
      "part a a\n"
      "part b b\n"
      "part a b  # trailing comment\n");
  REQUIRE(doc.is_part());
  CHECK(doc.name == "tiny");
  const MereoStructure& m = doc.part();
  CHECK(m.domain.size() == 2);
  CHECK(m.part.at(0, 1));
  CHECK(!m.part.at(1, 0));
}

TEST_CASE("parse a sum document with the empty collection") {
  auto doc = parse_model(
      "kind sum\n"
      "elements a\n"
      "sum a { }\n"
      "sum a { a }\n");
  REQUIRE(!doc.is_part());
  const SumStructure& s = doc.sum();
  CHECK(s.sum.holds(0, Subset()));
  CHECK(s.sum.holds(0, Subset(1)));
  CHECK(s.sum.family(0).size() == 2);
}

TEST_CASE("directive order is flexible where the grammar allows") {
  // elements before kind is fine; pairs always come after both.
  auto doc = parse_model("elements a\nkind part\npart a a\n");
  CHECK(doc.is_part());
  // a document with no pair lines is the empty relation
  auto empty = parse_model("kind sum\nelements a b\n");
  CHECK(empty.sum().sum.pair_count() == 0);
}

TEST_CASE("parse failures carry kinds and positions") {
  CHECK(kind_of_parse_failure("") == ErrorKind::parse);                       // missing kind
  CHECK(kind_of_parse_failure("kind part\n") == ErrorKind::parse);            // missing elements
  CHECK(kind_of_parse_failure("kind part\nkind sum\nelements a\n") == ErrorKind::parse);
  CHECK(kind_of_parse_failure("kind potato\nelements a\n") == ErrorKind::parse);
  CHECK(kind_of_parse_failure("kind part\nelements a\nwat a a\n") == ErrorKind::parse);
  CHECK(kind_of_parse_failure("kind part\nelements a a\n") == ErrorKind::duplicate_label);
  CHECK(kind_of_parse_failure("kind part\nelements a\npart a b\n") == ErrorKind::unknown_label);
  CHECK(kind_of_parse_failure("kind part\nelements a\npart a a\npart a a\n") ==
        ErrorKind::duplicate_pair);
  CHECK(kind_of_parse_failure("kind sum\nelements a\nsum a { a a }\n") ==
        ErrorKind::duplicate_member);
  CHECK(kind_of_parse_failure("kind sum\nelements a\nsum a { a\n") == ErrorKind::parse);
  CHECK(kind_of_parse_failure("kind sum\nelements a\nsum a { { } }\n") == ErrorKind::parse);
  CHECK(kind_of_parse_failure("kind part\nelements a\nsum a { a }\n") == ErrorKind::parse);
  CHECK(kind_of_parse_failure("kind sum\nelements a\npart a a\n") == ErrorKind::parse);
  CHECK(kind_of_parse_failure("part a a\nkind part\nelements a\n") == ErrorKind::parse);

  try {
    parse_model("kind part\nelements a\npart a b\n");
  } catch (const Error& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("export is canonical and stable under re-parse") {
  for (const WitnessFixture& f : all_fixtures()) {
    INFO(f.name);
    ModelDocument doc = document_of(f.structure, f.name, f.note);
    std::string text = export_model(doc);
    ModelDocument again = parse_model(text);
    CHECK(again.kind == "sum");
    CHECK(again.name == f.name);
    CHECK(again.sum().sum == f.structure.sum);
    CHECK(again.sum().domain == f.structure.domain);
    CHECK(export_model(again) == text);  // byte-stable
  }
}

TEST_CASE("round-trip idempotence on enumerated models") {
  for (int n : {1, 2, 3}) {
    for (const MereoStructure& m : enumerate_mereo(n, true).part_models) {
      std::string text = export_model(document_of(m));
      ModelDocument doc = parse_model(text);
      CHECK(doc.part().part == m.part);
      CHECK(export_model(doc) == text);
    }
    for (const SumStructure& s : enumerate_sum(n, true).sum_models) {
      std::string text = export_model(document_of(s));
      ModelDocument doc = parse_model(text);
      CHECK(doc.sum().sum == s.sum);
      CHECK(export_model(doc) == text);
    }
  }
}

TEST_CASE("shipped model files match the in-code fixtures") {
  const std::string dir = MEREO_MODELS_DIR;
  for (const WitnessFixture& f : all_fixtures()) {
    INFO(f.name);
    ModelDocument doc = parse_model(slurp(dir + "/" + f.name + ".model"));
    CHECK(doc.name == f.name);
    CHECK(doc.sum().sum == f.structure.sum);
    CHECK(doc.sum().domain == f.structure.domain);
  }
  ModelDocument basis = parse_model(slurp(dir + "/nontransitive-basis.model"));
  CHECK(basis.part().part == nontransitive_basis(true).part);
  ModelDocument top = parse_model(slurp(dir + "/atoms-under-top.model"));
  CHECK(check_part_axioms(top.part()).all_hold());
}

TEST_CASE("diagram export for sum structures follows the dashed-arrow convention") {
  std::string dot = export_dot(witness("s5-fail").structure);
  // two element nodes, three subset nodes, three dashed edges
  CHECK(dot.find("digraph sum_structure") == 0);
  for (const char* needle :
       {"e0 [xlabel=\"a\"]", "e1 [xlabel=\"b\"]", "s1 [label=\"{a}\"]", "s2 [label=\"{b}\"]",
        "s3 [label=\"{a,b}\"]", "e0 -> s1 [style=dashed]", "e0 -> s3 [style=dashed]",
        "e1 -> s2 [style=dashed]"}) {
    INFO(needle);
    CHECK(dot.find(needle) != std::string::npos);
  }

  // singleton model: one element node, one subset node, one edge
  Domain d = make_domain({"a"});
  SumRelation r(1);
  r.add(0, Subset(1));
  std::string tiny = export_dot(SumStructure(d, r));
  CHECK(tiny.find("e0 [xlabel=\"a\"]") != std::string::npos);
  CHECK(tiny.find("s1 [label=\"{a}\"]") != std::string::npos);
  CHECK(tiny.find("e0 -> s1 [style=dashed]") != std::string::npos);
}

TEST_CASE("diagram export for part structures draws the covering relation") {
  Domain d = make_domain({"a", "b", "c"});
  PartRelation r = PartRelation::identity(3);
  r.set(0, 1);  // a below b
  r.set(1, 2);  // b below c
  r.set(0, 2);  // transitive edge must not be drawn
  std::string dot = export_dot(MereoStructure(d, r));
  CHECK(dot.find("e0 -> e1") != std::string::npos);
  CHECK(dot.find("e1 -> e2") != std::string::npos);
  CHECK(dot.find("e0 -> e2") == std::string::npos);
}

TEST_CASE("DOT output is deterministic") {
  SumStructure s = witness("s3-fail").structure;
  CHECK(export_dot(s) == export_dot(s));
}
