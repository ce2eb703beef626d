#include <doctest.h>

#include <filesystem>

#include <json.hpp>

#include "nilrep/affine.hpp"
#include "nilrep/catalog.hpp"
#include "nilrep/dual.hpp"
#include "nilrep/io.hpp"
#include "nilrep/regular.hpp"

using namespace nilrep;
using nlohmann::json;

TEST_CASE("algebra round trip") {
  for (const auto& g : {heisenberg(), upper_triangular(4, Field::prime(3)), free_nilpotent(2, 4), filiform(13)}) {
    const std::string text = emit_algebra(g);
    const LieAlgebra back = parse_algebra(text);
    CHECK(back == g);
    CHECK(back.names() == g.names());
    CHECK(emit_algebra(back) == text);
  }
}

TEST_CASE("algebra format") {
  const json j = json::parse(emit_algebra(heisenberg()));
  CHECK(j["dim"] == 3);
  CHECK(j["field"] == "Q");
  CHECK(j["brackets"] == json::parse(R"j([{"i":1,"j":2,"terms":[[3,"1"]]}])j"));
  const LieAlgebra f = parse_algebra(R"j({"dim":2,"field":"GF(5)","brackets":[]})j");
  CHECK(f.field() == Field::prime(5));
  CHECK(f.is_abelian());
  const LieAlgebra r = parse_algebra(R"j({"dim":3,"field":"Q","brackets":[{"i":1,"j":2,"terms":[[3,"-3/6"]]}]})j");
  CHECK(r.structure(0, 1).at(2) == Scalar(-1, 2));
}

TEST_CASE("malformed algebras are rejected") {
  const char* bad[] = {
      "not json",
      R"j({"dim":2,"field":"Q","brackets":[],"extra":1})j",
      R"j({"field":"Q","brackets":[]})j",
      R"j({"dim":2,"field":"R","brackets":[]})j",
      R"j({"dim":2,"field":"Q","brackets":[{"i":2,"j":1,"terms":[]}]})j",
      R"j({"dim":2,"field":"Q","brackets":[{"i":1,"j":3,"terms":[]}]})j",
      R"j({"dim":3,"field":"Q","brackets":[{"i":1,"j":2,"terms":[[4,"1"]]}]})j",
      R"j({"dim":3,"field":"Q","brackets":[{"i":1,"j":2,"terms":[[3,1]]}]})j",
      R"j({"dim":3,"field":"Q","brackets":[{"i":1,"j":2,"terms":[[3,"1/0"]]}]})j",
      R"j({"dim":3,"field":"Q","brackets":[{"i":1,"j":2,"terms":[]},{"i":1,"j":2,"terms":[]}]})j",
      R"j({"dim":2,"field":"Q","brackets":[],"names":["a"]})j",
  };
  for (const char* text : bad) CHECK_THROWS_AS_MESSAGE(parse_algebra(text), ParseError, text);
}

TEST_CASE("representation round trip") {
  AffineOptions opt;
  for (const auto& g : {heisenberg(), upper_triangular(4, Field::prime(2)), free_nilpotent(2, 3)}) {
    for (const Representation& r : {algorithm_regular(g), algorithm_dual(g), *algorithm_affine(g, opt).rep}) {
      const std::string text = emit_representation(r);
      const Representation back = parse_representation(text, g);
      CHECK(back == r);
      CHECK(emit_representation(back) == text);
      const json j = json::parse(text);
      CHECK(j["algebra_checksum"] == algebra_checksum(g));
      CHECK(j["module_dim"] == r.module_dim);
      CHECK(j["matrices"].size() == g.dim());
    }
  }
}

TEST_CASE("representation checks") {
  const LieAlgebra h = heisenberg();
  const std::string text = emit_representation(algorithm_regular(h));
  CHECK_THROWS_AS(parse_representation(text, free_nilpotent(2, 3)), ParseError);
  // U_3 has the same structure constants as Heisenberg, so it matches.
  CHECK_NOTHROW(parse_representation(text, upper_triangular(3)));
  CHECK_THROWS_AS(parse_representation(text, heisenberg(Field::prime(2))), ParseError);
  json j = json::parse(text);
  j["matrices"].erase(0);
  CHECK_THROWS_AS(parse_representation(j.dump(), h), ParseError);
  j = json::parse(text);
  j["module_dim"] = 4;
  CHECK_THROWS_AS(parse_representation(j.dump(), h), ParseError);
  j = json::parse(text);
  j["surprise"] = true;
  CHECK_THROWS_AS(parse_representation(j.dump(), h), ParseError);
}

TEST_CASE("checksums") {
  CHECK(algebra_checksum(heisenberg()).size() == 16);
  CHECK(algebra_checksum(heisenberg()) == algebra_checksum(heisenberg()));
  CHECK(algebra_checksum(heisenberg()) != algebra_checksum(heisenberg(Field::prime(2))));
  LieAlgebra renamed = heisenberg();
  renamed.set_names({"a", "b", "c"});
  CHECK(algebra_checksum(renamed) == algebra_checksum(heisenberg()));
}

TEST_CASE("loading algebras") {
  CHECK(load_algebra("catalog:utri:4", Field::prime(2)) == upper_triangular(4, Field::prime(2)));
  const auto path = std::filesystem::temp_directory_path() / "nilrep_test_io_algebra.json";
  write_file(path.string(), emit_algebra(free_nilpotent(2, 3)));
  CHECK(load_algebra(path.string(), Field::rationals()) == free_nilpotent(2, 3));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_algebra("/nonexistent/algebra.json", Field::rationals()), ParseError);
  CHECK_THROWS(load_algebra("catalog:nothing:1", Field::rationals()));
}
