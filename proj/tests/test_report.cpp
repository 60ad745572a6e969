#include "doctest.h"

#include "affconn/errors.hpp"
#include "affconn/report.hpp"
#include "support.hpp"

using namespace affconn;

namespace {

constexpr const char* kHeisFile = R"({
  "name": "heis3",
  "dim": 3,
  "basis": ["x", "y", "z"],
  "brackets": [
    {"left": 0, "right": 1, "result": [["0", "0"], ["0", "0"], ["1", "0"]]}
  ]
})";

SearchConfig small_budget() {
  SearchConfig cfg;
  cfg.starts = 10;
  return cfg;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("parse_algebra") {
  TEST_CASE("heis3 file") {
    const NamedAlgebra a = parse_algebra(kHeisFile);
    CHECK(a.name == "heis3");
    CHECK(a.algebra.same_structure(builtin("heis3")));
    CHECK(a.algebra.basis_names() == std::vector<std::string>{"x", "y", "z"});
  }

  TEST_CASE("empty bracket list gives abelian3") {
    const NamedAlgebra a = parse_algebra(R"({"name": "a", "dim": 3, "brackets": []})");
    CHECK(a.algebra.same_structure(builtin("abelian3")));
    CHECK(a.algebra.basis_names() == std::vector<std::string>{"e1", "e2", "e3"});
  }

  TEST_CASE("inconsistent (0,1) and (1,0) entries") {
    const char* text = R"({"name": "bad", "dim": 3, "brackets": [
      {"left": 0, "right": 1, "result": [["0","0"],["0","0"],["1","0"]]},
      {"left": 1, "right": 0, "result": [["0","0"],["0","0"],["1","0"]]}]})";
    CHECK_THROWS_AS((void)parse_algebra(text), InconsistentEntry);
  }

  TEST_CASE("Jacobi violation surfaces with its indices") {
    const char* text = R"({"name": "bad", "dim": 3, "brackets": [
      {"left": 0, "right": 1, "result": [["1","0"],["0","0"],["0","0"]]},
      {"left": 1, "right": 2, "result": [["0","0"],["1","0"],["0","0"]]},
      {"left": 2, "right": 0, "result": [["0","0"],["0","0"],["1","0"]]}]})";
    CHECK_THROWS_AS((void)parse_algebra(text), JacobiViolation);
  }

  TEST_CASE("syntax errors carry a line number") {
    try {
      (void)parse_algebra("{\n  \"name\": \"x\",\n  \"dim\": 3,,\n}");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }

  TEST_CASE("schema errors carry a field pointer") {
    const auto field_of = [](const char* text) {
      try {
        (void)parse_algebra(text);
      } catch (const ParseError& e) {
        return e.field;
      }
      return std::string("<no error>");
    };
    CHECK(field_of(R"({"name": "x", "brackets": []})") == "/dim");
    CHECK(field_of(R"({"name": "x", "dim": 3, "brackets": [{"left": 0, "right": 1,
          "result": [["0","0"],["1.5","0"],["0","0"]]}]})") == "/brackets/0/result/1");
    CHECK(field_of(R"({"name": "x", "dim": 3, "brackets": [{"left": 0, "right": 1,
          "result": [["0","0"],["0","0"]]}]})") == "/brackets/0/result");
    CHECK(field_of(R"({"name": "x", "dim": -1, "brackets": []})") == "/dim");
  }

  TEST_CASE("out-of-range bracket index is positioned") {
    try {
      (void)parse_algebra(R"({"name": "x", "dim": 2, "brackets": [{"left": 0, "right": 2,
          "result": [["0","0"],["0","0"]]}]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.field == "/brackets/0/right");
    }
  }

  TEST_CASE("writer round trip") {
    for (const auto& name : builtin_names()) {
      const LieAlgebra g = builtin(name);
      const NamedAlgebra back = parse_algebra(algebra_to_json(name, g).dump());
      CHECK(back.name == name);
      CHECK(back.algebra == g);
    }
  }
}

TEST_SUITE("connection_and_map_files") {
  TEST_CASE("round trips through the writers") {
    const AffMap m = catalog_embedding(CatalogEmbedding::sol);
    const InvariantConnection c = lsa_from_etale(m);
    CHECK(parse_connection(connection_to_json(c).dump(), c.algebra()) == c);
    CHECK(parse_affmap(affmap_to_json(m).dump(), m.algebra()) == m);
  }

  TEST_CASE("dimension must match the algebra") {
    const InvariantConnection c = standard_connection(builtin("sl2"));
    json j = connection_to_json(c);
    j["dim"] = 2;
    CHECK_THROWS_AS((void)parse_connection(j.dump(), c.algebra()), ParseError);
  }

  TEST_CASE("complex coefficients survive") {
    Tensor3 gam(3);
    gam(0, 0, 0) = GaussRat(mpq_class(1, 2), mpq_class(-3, 7));
    const InvariantConnection c(builtin("abelian3"), gam);
    const json j = connection_to_json(c);
    CHECK(j["gamma"][0][0][0] == json::array({"1/2", "-3/7"}));
    CHECK(parse_connection(j.dump(), c.algebra()) == c);
  }
}

TEST_SUITE("reports") {
  TEST_CASE("sl2: NO, standard connection projectively flat") {
    const Report r = analyze("sl2", builtin("sl2"), small_budget());
    CHECK(r.decision.verdict == Verdict::no);
    REQUIRE(r.connections.size() == 2);
    CHECK(r.connections[1].name == "standard");
    CHECK(r.connections[1].projectively_flat == std::optional<bool>(true));
    CHECK_FALSE(r.connections[0].projectively_flat.has_value());
  }

  TEST_CASE("sol3: certificate Gamma(0,1,1) = 1, Gamma(0,2,2) = -1") {
    const Report r = analyze("sol3", builtin("sol3"), small_budget());
    CHECK(r.decision.verdict == Verdict::yes);
    REQUIRE(r.decision.certificate.has_value());
    Tensor3 expected(3);
    expected(0, 1, 1) = 1;
    expected(0, 2, 2) = -1;
    CHECK(r.decision.certificate->connection.gamma() == expected);
  }

  TEST_CASE("abelian3: zero certificate") {
    const Report r = analyze("abelian3", builtin("abelian3"), small_budget());
    CHECK(r.decision.verdict == Verdict::yes);
    CHECK(r.decision.certificate->connection.gamma().is_zero());
  }

  TEST_CASE("JSON round trip for every catalog algebra and a search report") {
    std::vector<Report> reports;
    for (const auto& name : builtin_names()) reports.push_back(analyze(name, builtin(name), small_budget()));
    const BracketEntry b[] = {{0, 1, {0, 1, 1}}, {0, 2, {0, 0, -1}}};
    reports.push_back(analyze("noncatalog", LieAlgebra::from_structure_constants(3, {}, b), small_budget()));
    for (const Report& r : reports) {
      const json j = report_to_json(r);
      const Report back = report_from_json(json::parse(j.dump()));
      CHECK(back == r);
      CHECK(report_to_json(back).dump() == j.dump());
    }
  }

  TEST_CASE("text and JSON agree") {
    for (const auto& name : builtin_names()) {
      const Report r = analyze(name, builtin(name), small_budget());
      const json j = report_to_json(r);
      const std::string text = report_to_text(r);
      CHECK(contains(text, "connection: " + j["decision"]["verdict"].get<std::string>() + " (" +
                               j["decision"]["branch"].get<std::string>() + ")"));
      CHECK(contains(text, "killing rank " + std::to_string(j["profile"]["killing_rank"].get<std::size_t>())));
      CHECK(contains(text, std::string("semisimple=") + (j["profile"]["semisimple"].get<bool>() ? "yes" : "no")));
      for (const auto& a : j["connections"]) {
        CHECK(contains(text, a["name"].get<std::string>() + ": flat=" + (a["flat"].get<bool>() ? "yes" : "no") +
                                 " torsion_free=" + (a["torsion_free"].get<bool>() ? "yes" : "no")));
      }
      for (const auto& note : j["decision"]["notes"]) CHECK(contains(text, note.get<std::string>()));
    }
  }
}

TEST_SUITE("classification") {
  TEST_CASE("four rows with the expected verdicts; round trip") {
    const auto rows = classify_dim3(small_budget());
    REQUIRE(rows.size() == 4);
    const std::vector<std::pair<std::string, Verdict>> expected{
        {"abelian3", Verdict::yes}, {"heis3", Verdict::yes}, {"sol3", Verdict::yes}, {"sl2", Verdict::no}};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(rows[i].algebra == expected[i].first);
      CHECK(rows[i].verdict == expected[i].second);
      if (rows[i].verdict == Verdict::yes) CHECK(verify_certificate(*rows[i].report.decision.certificate).ok());
    }
    const json j = classification_to_json(rows);
    const auto back = classification_from_json(json::parse(j.dump()));
    REQUIRE(back.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(back[i].algebra == rows[i].algebra);
      CHECK(back[i].verdict == rows[i].verdict);
      CHECK(back[i].report == rows[i].report);
    }
    const std::string text = classification_to_text(rows);
    for (const auto& [name, v] : expected) CHECK(contains(text, name));
  }
}
