#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "reference_latex.hpp"
#include "soflag/serialize.hpp"

using namespace soflag;
using th::N;
using th::P;
using th::q;

TEST_CASE("trace polynomial JSON schema") {
  TracePoly f = P("2,1") * NPoly::affine(q(-3, 2), 1) + th::p0();
  auto j = io::to_json(f);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0]["partition"] == io::json::array());
  CHECK(j[0]["coeff"] == io::json{{"1", "1"}});
  CHECK(j[1]["partition"] == io::json{2, 1});
  CHECK(j[1]["coeff"] == io::json{{"0", "1"}, {"1", "-3/2"}});
  CHECK(io::tracepoly_from_json(j, GroupMode::general()) == f);
}

TEST_CASE("trace polynomial JSON round-trips") {
  std::mt19937 rng(6);
  for (int t = 0; t < 30; ++t) {
    TracePoly f = th::random_poly(rng, 5, 6);
    auto text = io::to_json(f).dump();
    CHECK(io::tracepoly_from_json(io::json::parse(text), GroupMode::general()) == f);
  }
  TracePoly g = th::S4(2, 1) * NPoly(q(5, 7)) - th::constant(3, GroupMode::so4());
  CHECK(io::tracepoly_from_json(io::to_json(g), GroupMode::so4()) == g);
}

TEST_CASE("matrix JSON round-trips and checks its header") {
  for (auto [mode, id, k] : {std::tuple{GroupMode::so4(), BasisId::So4, 5u},
                             {GroupMode::so3(), BasisId::So3TracesOfPowers, 6u},
                             {GroupMode::general_at(5), BasisId::Partitions, 3u}}) {
    FlagMatrix m = build_matrix(mode, id, k);
    auto j = io::to_json(m);
    CHECK(j["k"] == k);
    FlagMatrix back = io::matrix_from_json(io::json::parse(j.dump()));
    CHECK(back.entries == m.entries);
    CHECK(back.basis.size() == m.basis.size());
  }
  auto j = io::to_json(build_matrix(GroupMode::so4(), BasisId::So4, 2));
  j["basis"][1] = "p_7";
  CHECK_THROWS_AS(io::matrix_from_json(j), std::invalid_argument);
  CHECK(io::to_json(build_matrix(GroupMode::so4(), BasisId::So4, 1))["entries"][1][1] == "-3/2");
}

TEST_CASE("CSV carries a header and an exact column") {
  std::string csv = io::matrix_csv(build_matrix(GroupMode::so4(), BasisId::So4, 1));
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 5 + 4);
  CHECK(lines[0] == "# mode=so4");
  CHECK(lines[1] == "# basis_id=so4");
  CHECK(lines[2] == "# k=1");
  CHECK(lines[3] == "# basis=p_0;p_1");
  CHECK(lines[4] == "row,col,row_label,col_label,value,exact");
  CHECK(lines[8] == "1,1,p_1,p_1,-1.5,-3/2");
}

TEST_CASE("LaTeX output reproduces the typeset order-4 table") {
  std::string ours = io::matrix_latex(build_matrix(GroupMode::so4(), BasisId::So4, 4));
  CHECK(th::strip_whitespace(ours) == th::strip_whitespace(th::kSo4Latex));
}

TEST_CASE("scalar formatting") {
  CHECK(io::latex(q(-3, 2)) == "-\\frac{3}{2}");
  CHECK(io::latex(q(12)) == "12");
  CHECK(io::latex(q(0)) == "0");
  CHECK(io::latex_label("p_1^10 p_2") == "p_1^{10} p_2");
  CHECK(io::latex_label("p_1^2") == "p_1^2");
  CHECK(io::decimal(q(1, 3)) == "0.3333333333333333");
  CHECK(io::decimal(q(-15, 2)) == "-7.5");
  CHECK(io::parse_mode("generaln@6") == GroupMode::general_at(6));
  CHECK(io::parse_mode("so3") == GroupMode::so3());
  CHECK_THROWS_AS(io::parse_mode("so5"), std::invalid_argument);
}

TEST_CASE("verification report JSON") {
  auto r = numeric::verify_partition(3, Partition{2}, 4, 1);
  auto j = io::to_json(r);
  for (const char* key : {"target", "n", "params", "samples", "seed", "tol", "max_abs_err", "max_rel_err", "pass"})
    CHECK(j.contains(key));
  CHECK(j["params"]["partition"] == "2");
  CHECK(j["pass"] == true);
}
