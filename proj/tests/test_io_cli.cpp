#include <doctest.h>

#include <sstream>

#include "rkhs/cli.hpp"
#include "rkhs/io.hpp"

using namespace rkhs;
using nlohmann::json;

TEST_CASE("CSV round trip keeps every bit") {
  CsvTable t;
  t.metadata = {{"kind", "test"}, {"x", "1"}};
  t.columns = {"a", "b"};
  t.rows = {{0.1, -1e-300}, {1.0 / 3.0, 6.02214076e23}};
  std::stringstream s;
  write_csv(s, t);
  CHECK(s.str().rfind("# schema=rkhs-v1\n", 0) == 0);
  const CsvTable back = read_csv(s);
  CHECK(back.columns == t.columns);
  CHECK(back.rows == t.rows);
  CHECK(back.meta("kind") == "test");
  CHECK(back.column("b") == 1);
  CHECK_THROWS_AS(back.column("c"), Error);
}

TEST_CASE("CSV reader rejects malformed input") {
  std::istringstream no_schema("a,b\n1,2\n");
  CHECK_THROWS_AS(read_csv(no_schema), Error);
  std::istringstream ragged("# schema=rkhs-v1\n# \na,b\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), Error);
  std::istringstream junk("# schema=rkhs-v1\n# \na\nxyz\n");
  CHECK_THROWS_AS(read_csv(junk), Error);
}

TEST_CASE("dataset and expansion through CSV and JSON") {
  const LabeledDataset d({Complex(0.1, 0.2), Complex(-0.3, 0.4)}, {Complex(1, -1), 2.0}, 0.5);
  const KernelSpec k = KernelSpec::mittag_leffler(0.75);
  std::stringstream s;
  write_csv(s, to_table(d, k));
  const LabeledDataset d2 = dataset_from_table(read_csv(s));
  CHECK(d2.inputs() == d.inputs());
  CHECK(d2.outputs() == d.outputs());
  CHECK(d2.lambda() == 0.5);
  CHECK(kernel_from_json(to_json(k)) == k);

  const json j = to_json(d, k);
  const LabeledDataset d3 = dataset_from_json(json::parse(j.dump()));
  CHECK(d3.outputs() == d.outputs());

  const CoefficientExpansion e(d.inputs(), d.outputs(), KernelSpec::rbf(1.1));
  const auto e2 = expansion_from_json(json::parse(to_json(e).dump()));
  CHECK(e2.coefficients() == e.coefficients());
  CHECK(e2.kernel() == e.kernel());
  std::stringstream s2;
  write_csv(s2, to_table(e));
  CHECK(expansion_from_table(read_csv(s2)).centers() == e.centers());
}

TEST_CASE("config merging") {
  RunConfig base;
  const RunConfig c = merge_config(json{{"n", 12}, {"a", "3.5"}, {"family", "ml"}}, base);
  CHECK(c.n == 12);
  CHECK(c.a == 3.5);
  CHECK(c.family == "ml");
  CHECK(c.lambda == base.lambda);
  try {
    (void)merge_config(json{{"bogus", 1}}, base);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::config);
  }
  CHECK_THROWS_AS(merge_config(json{{"n", "ten"}}, base), Error);
  CHECK_THROWS_AS(merge_config(json{{"n", 1.5}}, base), Error);
}

TEST_CASE("gen-data writes n + 1 rows") {
  RunConfig c;
  c.command = "gen-data";
  c.n = 100;
  std::stringstream out;
  run(c, out);
  const CsvTable t = read_csv(out);
  CHECK(t.rows.size() == 101);
  CHECK(t.meta("family") == "fock-classical");
  CHECK(t.columns == std::vector<std::string>{"re_z", "im_z", "re_w", "im_w"});
}

TEST_CASE("evolve reports a small closed-form gap") {
  RunConfig c;
  c.command = "evolve";
  c.n = 8;
  std::stringstream out;
  run(c, out);
  const CsvTable t = read_csv(out);
  CHECK(t.rows.size() == 2048);
  CHECK(std::stod(t.meta("l2_rel_gap")) < 1e-7);
}

TEST_CASE("figure data for each kind") {
  for (const char* which : {"ex1", "rbf", "blaschke-real", "blaschke-imag", "touchard", "superosc", "evolution"}) {
    RunConfig c;
    c.command = "figure";
    c.which = which;
    c.n = 12;
    c.points = 256;
    c.xmin = -16;
    std::stringstream out;
    CHECK_NOTHROW(run(c, out));
    CHECK(read_csv(out).rows.size() > 0);
  }
  RunConfig bad;
  bad.command = "figure";
  bad.which = "nope";
  std::stringstream out;
  CHECK_THROWS_AS(run(bad, out), Error);
}
