#include <sstream>

#include "cpci/errors.hpp"
#include "cpci/tables.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cpci;

namespace {

SummaryTable sample_table(oracle::TestRng& rng, std::size_t nx, std::size_t ny, std::size_t m) {
  std::vector<TypeCounts> counts;
  for (std::size_t k = 0; k < nx * ny; ++k) {
    std::size_t a = rng.below(m + 1);
    std::size_t b = rng.below(m - a + 1);
    std::size_t c = rng.below(m - a - b + 1);
    counts.push_back({a, b, c, m});
  }
  return make_table(GridTopology(nx, ny), summarize(counts, ConfidenceLevel(0.9)));
}

}  // namespace

TEST_CASE("summary CSV layout") {
  oracle::TestRng rng(1);
  auto t = sample_table(rng, 3, 2, 9);
  std::ostringstream out;
  write_summary_csv(t, out);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "# m=9 gamma=0.9");
  std::getline(lines, line);
  CHECK(line == "i,j,min_hat,min_lo,min_hi,max_hat,max_lo,max_hi,sad_hat,sad_lo,sad_hi");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 6);
  CHECK(out.str().find('\r') == std::string::npos);
}

TEST_CASE("summary CSV roundtrip keeps 9 significant digits") {
  oracle::TestRng rng(2);
  auto t = sample_table(rng, 4, 3, 49);
  std::stringstream buf;
  write_summary_csv(t, buf);
  auto back = read_summary_csv(buf);
  CHECK(back.nx == 4);
  CHECK(back.ny == 3);
  CHECK(back.m == 49);
  CHECK(back.gamma == 0.9);
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    CHECK(format_row_values(back.rows[k]) == format_row_values(t.rows[k]));
    for (std::size_t ty = 0; ty < 3; ++ty) {
      CHECK(back.rows[k].by_type[ty].p_upper == doctest::Approx(t.rows[k].by_type[ty].p_upper).epsilon(1e-8));
      CHECK(back.rows[k].by_type[ty].c == t.rows[k].by_type[ty].c);
    }
  }
  // Writing the parsed table again is byte-identical.
  std::ostringstream again, first;
  write_summary_csv(back, again);
  write_summary_csv(t, first);
  CHECK(again.str() == first.str());
}

TEST_CASE("summary CSV errors") {
  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_summary_csv(in), ParseError);
  };
  const std::string head = "# m=4 gamma=0.95\ni,j,min_hat,min_lo,min_hi,max_hat,max_lo,max_hi,sad_hat,sad_lo,sad_hi\n";
  fails("i,j,min_hat,min_lo,min_hi,max_hat,max_lo,max_hi,sad_hat,sad_lo,sad_hi\n0,0,0,0,1,0,0,1,0,0,1\n");
  fails(head);
  fails(head + "0,0,0,0,1,0,0,1,0,0\n");
  fails(head + "0,0,0,0,1,0,0,1,0,0,1.5\n");
  fails(head + "0,0,0,0.5,0.2,0,0,1,0,0,1\n");
  fails(head + "0,0,0,0,1,0,0,1,0,0,1\n1,1,0,0,1,0,0,1,0,0,1\n");  // missing vertices
  fails(head + "1,0,0,0,1,0,0,1,0,0,1\n0,0,0,0,1,0,0,1,0,0,1\n");  // order
}

TEST_CASE("query text") {
  oracle::TestRng rng(3);
  auto t = sample_table(rng, 3, 3, 9);
  auto text = describe_vertex(t, 2, 1);
  auto vals = format_row_values(t.at(2, 1));
  CHECK(text.find("m=9") != std::string::npos);
  CHECK(text.find("gamma=0.9") != std::string::npos);
  for (const auto& v : vals) CHECK(text.find(v) != std::string::npos);
  try {
    describe_vertex(t, 0, 3);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("j in [0,2]") != std::string::npos);
  }
}

TEST_CASE("counts and classification CSV") {
  GridTopology topo(2, 2);
  std::vector<TypeCounts> counts{{1, 0, 0, 3}, {0, 2, 0, 3}, {0, 0, 3, 3}, {0, 0, 0, 3}};
  std::ostringstream out;
  write_counts_csv(topo, counts, out);
  CHECK(out.str() == "i,j,c_min,c_max,c_saddle,m\n0,0,1,0,0,3\n1,0,0,2,0,3\n0,1,0,0,3,3\n1,1,0,0,0,3\n");

  std::vector<CriticalType> types{CriticalType::Minimum, CriticalType::Regular, CriticalType::Saddle,
                                  CriticalType::Maximum};
  std::ostringstream cls;
  write_classification_csv(topo, types, cls);
  CHECK(cls.str() == "i,j,type\n0,0,min\n0,1,saddle\n1,1,max\n");
}
