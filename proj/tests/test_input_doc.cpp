#include <doctest.h>

#include <string>

#include "nongen/input_doc.hpp"

using namespace nongen;

TEST_SUITE("input_doc") {

TEST_CASE("a complete document parses into descriptor, bindings, subgroups") {
  InputDocument doc = parse_input_document(
      "# reference input\n"
      "rank 2\n"
      "delta 0\n"
      "\n"
      "g = ab          # the element under test\n"
      "f = a\n"
      "subgroup H = a b\n"
      "subgroup P = aa ab ba\n");

  CHECK(doc.descriptor.rank() == 2);
  CHECK(doc.descriptor.delta() == 0);
  REQUIRE(doc.find_binding("g") != nullptr);
  CHECK(doc.find_binding("g")->str() == "ab");
  CHECK(doc.find_binding("f")->str() == "a");
  CHECK(doc.find_binding("missing") == nullptr);

  REQUIRE(doc.find_subgroup("H") != nullptr);
  CHECK(doc.find_subgroup("H")->size() == 2);
  REQUIRE(doc.find_subgroup("P") != nullptr);
  CHECK(doc.find_subgroup("P")->at(2).str() == "ba");
  CHECK(doc.find_subgroup("Q") == nullptr);
  CHECK(doc.subgroups.front().first == "H");
}

TEST_CASE("custom letters and nonzero delta") {
  InputDocument doc = parse_input_document(
      "rank 3\n"
      "letters xyz\n"
      "delta 4\n"
      "w = xYz\n");
  CHECK(doc.descriptor.letters() == "xyz");
  CHECK(doc.descriptor.delta() == 4);
  CHECK(doc.find_binding("w")->str() == "xYz");
}

TEST_CASE("identity literal and underscore names") {
  InputDocument doc = parse_input_document(
      "rank 1\n"
      "trivial_word = 1\n"
      "subgroup _S = a\n");
  CHECK(doc.find_binding("trivial_word")->is_identity());
  CHECK(doc.find_subgroup("_S")->front().str() == "a");
}

TEST_CASE("diagnostics carry one-based line and column positions") {
  auto expect_error = [](const std::string& text, std::size_t line) {
    try {
      parse_input_document(text);
      FAIL("expected a parse failure for: ", text);
    } catch (const DocParseError& e) {
      CHECK(e.line == line);
      CHECK(e.column >= 1);
      CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
  };

  expect_error("g = ab\n", 1);                      // rank must come first
  expect_error("rank 2\nrank 2\n", 2);              // rank given twice
  expect_error("rank 0\n", 1);                      // invalid rank
  expect_error("rank 27\n", 1);                     // invalid rank
  expect_error("rank 99999999999999999\n", 1);      // out of range
  expect_error("rank 2\nletters xyz\n", 2);         // letters/rank mismatch
  expect_error("rank 2\ng = ab\ng = ba\n", 3);      // duplicate name
  expect_error("rank 2\ng = ab\nsubgroup g = a\n", 3);
  expect_error("rank 2\ng = axb\n", 2);             // bad letter
  expect_error("rank 2\nsubgroup H =\n", 2);        // empty subgroup
  expect_error("rank 2\nnoise\n", 2);               // not a definition
  expect_error("rank 2\n2bad = ab\n", 2);           // invalid name
  expect_error("rank 2\ng = ab\nletters xy\n", 3);  // letters after use

  try {
    parse_input_document("rank 2\ng = abXX\nh = aYa\n");
    FAIL("expected a parse failure");
  } catch (const DocParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 7);  // the first X, 1-based
  }
}

TEST_CASE("words in a document obey the declared letters") {
  CHECK_THROWS_AS(parse_input_document("rank 2\nletters xy\ng = ab\n"),
                  DocParseError);
  InputDocument ok = parse_input_document("rank 2\nletters xy\ng = xy\n");
  CHECK(ok.find_binding("g")->str() == "xy");
}

}  // TEST_SUITE
