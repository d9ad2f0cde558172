#include <gtest/gtest.h>

#include "tnsdim/report.hpp"
#include "tnsdim/spec_io.hpp"
#include "tnsdim/tables.hpp"

using namespace tnsdim;

namespace {

const PrimeField F;

const char* kTriangle = R"({"name": "C3",
  "vertices": [{"id": 0, "n": 2}, {"id": 1, "n": 2}, {"id": 2, "n": 2}],
  "edges": [{"ends": [0, 1], "m": 2}, {"ends": [1, 2], "m": 2}, {"ends": [2, 0], "m": 2}]})";

std::string spec_with_edges(const std::string& edges) {
  return R"({"vertices": [{"id": "a", "n": 2}, {"id": "b", "n": 3}], "edges": )" + edges + "}";
}

}  // namespace

TEST(Spec, TriangleIsCycle) {
  const auto net = parse_spec(kTriangle);
  EXPECT_EQ(net.name(), "C3");
  EXPECT_EQ(net, make_cycle({2, 2, 2}, {2, 2, 2}));
  EXPECT_EQ(spec_to_json(net), json::parse(kTriangle));
}

TEST(Spec, RoundTrip) {
  for (const auto& net : {make_cycle({2, 3, 4}, {5, 6, 7}), make_star({2, 2, 3}, {1, 4, 4, 2}),
                          make_path({2}, {3, 3})}) {
    EXPECT_EQ(parse_spec(spec_to_json(net).dump()), net);
  }
}

TEST(Spec, StringIdsAreSortedAndKept) {
  const auto net = parse_spec(R"({"vertices": [{"id": "y", "n": 3}, {"id": "x", "n": 2}],
                                  "edges": [{"ends": ["x", "y"], "m": 2}]})");
  EXPECT_EQ(net.vertex(0).label, "x");
  EXPECT_EQ(net.local_dims(), (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(spec_to_json(net)["vertices"][0]["id"], "x");
}

TEST(Spec, NumericIdsSortNumerically) {
  const auto net = parse_spec(R"({"vertices": [{"id": 10, "n": 3}, {"id": 9, "n": 2}], "edges": []})");
  EXPECT_EQ(net.vertex(0).label, "9");
  EXPECT_EQ(label_json("9"), json(9));
  EXPECT_EQ(label_json("09"), json("09"));
}

TEST(Spec, Errors) {
  EXPECT_THROW(parse_spec(spec_with_edges(R"([{"ends": ["a", "a"], "m": 2}])")), ValidationError);
  EXPECT_THROW(parse_spec(spec_with_edges(R"([{"ends": ["a", "b"], "m": 2}, {"ends": ["b", "a"], "m": 3}])")),
               ValidationError);
  EXPECT_THROW(parse_spec(spec_with_edges(R"([{"ends": ["a", "c"], "m": 2}])")), ValidationError);
  EXPECT_THROW(parse_spec(spec_with_edges(R"([{"ends": ["a", "b"], "m": 0}])")), ValidationError);
  EXPECT_THROW(parse_spec(spec_with_edges(R"([{"ends": ["a"], "m": 2}])")), ParseError);
  EXPECT_THROW(parse_spec(spec_with_edges(R"([{"ends": ["a", "b"]}])")), ParseError);
  EXPECT_THROW(parse_spec(R"({"vertices": [{"n": 2}], "edges": []})"), ParseError);
  EXPECT_THROW(parse_spec(R"({"vertices": [{"id": 1, "n": 2}, {"id": 1, "n": 2}]})"), ValidationError);
  EXPECT_THROW(parse_spec("{not json"), ParseError);
  try {
    parse_spec(spec_with_edges(R"([{"ends": ["a", "a"], "m": 2}])"));
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("loop"), std::string::npos);
  }
  try {
    parse_spec(spec_with_edges(R"([{"ends": ["a", "b"], "m": 2}, {"ends": ["b", "a"], "m": 3}])"));
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(TensorJson, RoundTrip) {
  Rng rng(1);
  const auto t = random_tensor({2, 3, 4}, F, rng);
  EXPECT_EQ(tensor_from_json(tensor_to_json(t), F), t);
  const auto g = graph_tensor(make_cycle({2, 2, 2}, {1, 1, 1}), F);
  EXPECT_EQ(tensor_to_json(g).size(), 8u);
  EXPECT_EQ(tensor_from_json(tensor_to_json(g), F), g);
}

TEST(TensorJson, ObjectFormAndValues) {
  const auto doc = json::parse(R"({"dims": [2, 2], "entries": [{"index": [0, 1], "value": "-3/2"},
                                                              {"index": [1, 0], "value": 4}]})");
  const auto t = tensor_from_json(doc, F);
  EXPECT_EQ(t.dims(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(t.at(std::vector<std::size_t>{0, 1}), F.from_int(-3) / F.from_int(2));
  EXPECT_EQ(t.at(std::vector<std::size_t>{1, 0}), F.from_int(4));
  const auto q = tensor_from_json(doc, RationalField());
  EXPECT_EQ(to_string(q.at(std::vector<std::size_t>{0, 1})), "-3/2");
  EXPECT_THROW(tensor_from_json(json::array(), F), ParseError);
  EXPECT_THROW(tensor_from_json(json::parse(R"({"dims": [1], "entries": [{"index": [3], "value": "1"}]})"), F),
               ParseError);
  EXPECT_THROW(parse_elem("1/0", F), ParseError);
  EXPECT_THROW(parse_elem("x", F), ParseError);
}

TEST(Report, JsonFields) {
  const auto rep = dim_report(make_cycle({2, 2, 2}, {2, 3, 4}), F, Rng(1));
  const auto j = report_to_json(rep);
  EXPECT_EQ(j["verdict"]["kind"], "Range");
  EXPECT_EQ(j["verdict"]["lo"], 22);
  EXPECT_EQ(j["verdict"]["hi"], 24);
  EXPECT_EQ(j["ambient_dim"], 24);
  EXPECT_EQ(j["gauge_dim"], 9);
  EXPECT_EQ(j["provenance"]["seed"], 1);
  EXPECT_EQ(j["provenance"]["prime"], kDefaultPrime);
  EXPECT_TRUE(j["raw_upper_bound"].is_null());
  const auto e = report_to_json(dim_report(make_cycle({2, 2, 2}, {2, 2, 2}), F, Rng(1)));
  EXPECT_EQ(e["verdict"], json({{"kind", "Exact"}, {"value", 8}}));
}

TEST(Report, CsvRow) {
  const auto rep = dim_report(make_cycle({2, 2, 2}, {5, 5, 5}), F, Rng(1));
  const auto header = report_csv_header();
  const auto row = report_to_csv_row(rep);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
  EXPECT_NE(row.find(",49,49,Exact,"), std::string::npos);
}

TEST(Report, ReductionText) {
  const auto net = make_cycle({2, 2, 2}, {5, 5, 5});
  const auto text = reduction_to_text(net, normalize(net));
  EXPECT_NE(text.find("step 3"), std::string::npos);
  EXPECT_NE(text.find("offset 12"), std::string::npos);
}

TEST(Tables, ShippedShapes) {
  const auto c3 = ref_table("c3"), c4 = ref_table("c4");
  EXPECT_EQ(c3.size(), 10u);
  EXPECT_EQ(c4.size(), 21u);
  std::vector<std::int64_t> lower;
  for (const auto& r : c3) lower.push_back(r.lower);
  EXPECT_EQ(lower, (std::vector<std::int64_t>{8, 12, 16, 18, 22, 26, 25, 29, 31, 37}));
  std::size_t starred = 0;
  for (const auto& r : c4) starred += r.starred;
  EXPECT_EQ(starred, 6u);
  for (const auto& r : c3) EXPECT_EQ(r.source, "Table 1");
  EXPECT_THROW(ref_table("c5"), Error);
}

TEST(Tables, ParseCsv) {
  const auto rows = parse_table_csv("n,lower,upper,starred,source\n2 3 4,22,24,1,Table 1\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].n, (std::vector<std::int64_t>{2, 3, 4}));
  EXPECT_TRUE(rows[0].starred);
  EXPECT_THROW(parse_table_csv("n,lower,upper,starred,source\n2 3,x,24,1,Table 1\n"), Error);
}

TEST(Tables, C3MismatchIsFlagged) {
  const auto rows = compute_table("c3", F, Rng(1));
  std::size_t mismatches = 0;
  for (const auto& r : rows) {
    if (r.n == std::vector<std::int64_t>{3, 4, 4}) {
      EXPECT_EQ(r.upper, 33);
      EXPECT_FALSE(r.upper_match);
    } else {
      mismatches += !r.lower_match || !r.upper_match || !r.starred_match;
    }
  }
  EXPECT_EQ(mismatches, 0u);
  const auto csv = table_to_csv(rows);
  EXPECT_NE(csv.find("upper mismatch vs Table 1"), std::string::npos);
  EXPECT_EQ(csv.substr(0, csv.find('\n') + 1), table_csv_header());
}
