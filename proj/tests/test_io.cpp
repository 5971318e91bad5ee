#include <gtest/gtest.h>

#include "hypint/io.hpp"
#include "oracles.hpp"

using namespace hypint;

namespace {

std::string corpus(const std::string& name) { return std::string(HYPINT_CORPUS_DIR) + "/" + name; }

void expect_field_error(const std::string& text, const std::string& field) {
  try {
    parse_document(text);
    FAIL() << "accepted " << text;
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Document, ErrorsNameTheField) {
  expect_field_error(R"({"points":[[0,1],[1,1]]})", "aprime");
  expect_field_error(R"({"points":5,"aprime":[1]})", "points");
  expect_field_error(R"({"points":[[0,1],[1,1]],"aprime":[3]})", "aprime");
  expect_field_error(R"({"points":[[0,1],[1,1]],"aprime":[1],"parameters":[[1]]})", "parameters[0]");
  expect_field_error(R"({"C":[[1]]})", "'D'");
  expect_field_error(R"({"points":[[0,1],[1,"x"]],"aprime":[1]})", "points[1]");
  expect_field_error("{", "malformed");
}

TEST(Document, CorpusFilesLoad) {
  for (const char* f : {"cubic_surface.json", "family_30_15_10_6.json", "config_30_15_10_6.json", "central_binomial.json",
                        "negative_control.json", "smallest.json", "binomial_line.json", "nonminimal.json"}) {
    Document d = load_document(corpus(f));
    EXPECT_TRUE(d.config.has_value()) << f;
  }
  Document fam = load_document(corpus("family_30_15_10_6.json"));
  ASSERT_TRUE(fam.family);
  EXPECT_EQ(fam.parameters.size(), 2u);
  EXPECT_THROW(load_document(corpus("unbalanced.json")), InputError);
}

TEST(Series, TextRoundTrip) {
  LatticeConfig cfg = oracle::cubic();
  SparseSeries s = expand_Fu(cfg, {-2, -1, -1, -2, -2}, 9).series;
  SparseSeries back = series_from_text(series_to_text(s, cfg));
  EXPECT_EQ(back.terms, s.terms);
  EXPECT_EQ(back.u, s.u);
  EXPECT_EQ(back.frontier, s.frontier);
  EXPECT_EQ(back.M, s.M);
}

TEST(Series, GoldenCubicFile) {
  Document d = load_document(corpus("cubic_surface.json"));
  SparseSeries s = expand_Fu(*d.config, {-1, -2, -2, -1, -2}, 5).series;
  EXPECT_EQ(series_to_text(s, *d.config), read_text_file(corpus("golden/cubic_surface_minus_beta_D5.txt")));
}

TEST(Json, ConeAndGroupAreCanonical) {
  LatticeConfig a = oracle::cubic();
  LatticeConfig b(oracle::cubic_points(), {1, 0});
  EXPECT_EQ(cone_to_json(a.cone()), cone_to_json(a.cone()));
  EXPECT_EQ(za_to_json(a.za()), za_to_json(b.za()));
  const std::string j = cone_to_json(a.cone());
  EXPECT_NE(j.find("\"facets\""), std::string::npos);
  EXPECT_NE(j.find("\"dimension\":4"), std::string::npos);
}

TEST(Vector, ParsesSignedLists) {
  EXPECT_EQ(parse_vector("-1,2, 3"), (Vec{-1, 2, 3}));
  EXPECT_EQ(parse_vector("(4,-5)"), (Vec{4, -5}));
  EXPECT_THROW(parse_vector("1,x"), InputError);
  EXPECT_THROW(parse_vector(""), InputError);
}
