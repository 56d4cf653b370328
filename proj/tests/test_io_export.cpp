#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "symnc/construct.hpp"
#include "symnc/error.hpp"
#include "symnc/export.hpp"
#include "symnc/io.hpp"

using namespace symnc;
using fixtures::S;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

ErrorCode parse_error_code(const std::string& text, std::string* message = nullptr) {
  try {
    parse_collection(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("no error for: " << text);
  return ErrorCode::InvalidRange;
}

}  // namespace

TEST_CASE("collection files round trip") {
  nlohmann::json meta;
  meta["generator"] = "test";
  const auto file = CollectionFile::from_collection(fixtures::example_4_10(), meta);
  const std::string text = serialize_collection(file);
  CHECK(text.find("\"format\": 1") != std::string::npos);
  CHECK(text.find("[1,2,3,4]") != std::string::npos);
  const auto back = parse_collection(text);
  CHECK(back.n == 10);
  CHECK(back.k == 4);
  CHECK(back.metadata["generator"] == "test");
  CHECK(back.collection() == fixtures::example_4_10());
  CHECK(serialize_collection(back) == text);

  const auto plain = serialize_collection(CollectionFile::from_collection(fixtures::square_2_4()));
  CHECK(plain.find("metadata") == std::string::npos);
  CHECK(plain.back() == '\n');

  const auto path = (std::filesystem::temp_directory_path() / "symnc_roundtrip.json").string();
  save_collection(file, path);
  CHECK(serialize_collection(load_collection(path)) == text);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_collection(path), Error);
}

TEST_CASE("unsorted and duplicate members are canonicalised on write") {
  const auto f = parse_collection(R"({"format": 1, "n": 5, "k": 2, "sets": [[3, 4], [1, 2], [3, 4]]})");
  CHECK(f.sets.size() == 3);
  const auto text = serialize_collection(f);
  CHECK(text.find("[1,2]") < text.find("[3,4]"));
  CHECK(text.find("[3,4]") == text.rfind("[3,4]"));
}

TEST_CASE("parse errors carry positions") {
  std::string msg;
  CHECK(parse_error_code("{\n  \"format\": 1, \"n\": 4,\n  \"k\": 2,\n  \"sets\": [[1, 2],, [2, 3]]\n}", &msg) == ErrorCode::ParseError);
  CHECK(msg.find("line 4") != std::string::npos);
  CHECK(msg.find('^') != std::string::npos);

  CHECK(parse_error_code(R"({"format": 1, "n": 4, "sets": []})", &msg) == ErrorCode::ParseError);
  CHECK(msg.find("\"k\"") != std::string::npos);
  CHECK(parse_error_code(R"({"format": 1, "n": 4, "k": 2, "sets": [[0, 1]]})") == ErrorCode::ParseError);
  CHECK(parse_error_code(R"({"format": 1, "n": 4, "k": 2, "sets": [[2, 1]]})") == ErrorCode::ParseError);
  CHECK(parse_error_code(R"({"format": 1, "n": 4, "k": 2, "sets": [["a"]]})") == ErrorCode::ParseError);
  CHECK(parse_error_code(R"({"format": 9, "n": 4, "k": 2, "sets": []})") == ErrorCode::ParseError);
  CHECK(parse_error_code(R"([1, 2])") == ErrorCode::ParseError);

  // wrong sizes parse, and only fail when a collection is requested
  const auto odd = parse_collection(R"({"format": 1, "n": 4, "k": 2, "sets": [[1, 2, 3]]})");
  CHECK_THROWS_AS(odd.collection(), Error);
}

TEST_CASE("pretty json") {
  nlohmann::json j;
  j["a"] = {1, 2, 3};
  j["b"] = nlohmann::json::array();
  CHECK(pretty_json(j) == "{\n  \"a\": [1,2,3],\n  \"b\": []\n}\n");
  CHECK(sets_to_json({S({1, 2}), S({4})}).dump() == "[[1,2],[4]]");
}

TEST_CASE("export formats") {
  CHECK(parse_export_format("dot") == ExportFormat::Dot);
  CHECK(parse_export_format("tikz") == ExportFormat::Tikz);
  CHECK(to_string(ExportFormat::Svg) == "svg");
  try {
    parse_export_format("png");
    FAIL("expected UnsupportedFormat");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedFormat);
  }
}

TEST_CASE("complex and quiver exports") {
  const auto cx = build_complex(fixtures::example_4_10());
  const auto qp = orient(cx);
  for (auto fmt : {ExportFormat::Dot, ExportFormat::Json, ExportFormat::Svg, ExportFormat::Tikz}) {
    CHECK(export_complex(cx, fmt) == export_complex(build_complex(fixtures::example_4_10()), fmt));
    CHECK(export_quiver(qp, fmt) == export_quiver(orient(cx), fmt));
  }

  const auto svg = export_complex(cx, ExportFormat::Svg);
  CHECK(occurrences(svg, "class=\"vertex") == 25);
  CHECK(occurrences(svg, "class=\"vertex frozen\"") == 10);

  const auto dot = export_complex(cx, ExportFormat::Dot);
  CHECK(dot.rfind("graph complex {", 0) == 0);
  CHECK(occurrences(dot, " -- ") == 55);

  const auto js = nlohmann::json::parse(export_complex(cx, ExportFormat::Json));
  CHECK(js["kind"] == "complex");
  CHECK(js["vertices"].size() == 25);
  CHECK(js["edges"].size() == 55);
  CHECK(js["faces"].size() == 31);

  const auto qj = nlohmann::json::parse(export_quiver(qp, ExportFormat::Json));
  CHECK(qj["kind"] == "quiver");
  CHECK(qj["arrows"].size() == qp.arrows.size());
  CHECK(qj["potential"].size() == qp.potential.size());

  const auto jac = jacobian_quiver(orient(build_complex(construct_general(2, 4))));
  const auto jdot = export_quiver(jac, ExportFormat::Dot);
  CHECK(jdot.rfind("digraph quiver {", 0) == 0);
  CHECK(occurrences(jdot, "[shape=") == 1);
  CHECK(occurrences(jdot, " -> ") == 0);

  const auto tikz = export_quiver(qp, ExportFormat::Tikz);
  CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
}
