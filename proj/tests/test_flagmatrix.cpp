#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "soflag/flagmatrix.hpp"
#include "soflag/laplacian.hpp"

using namespace soflag;
using th::q;

namespace {

std::vector<std::string> labels(const FlagBasis& b) {
  std::vector<std::string> out;
  for (auto& e : b.elements) out.push_back(e.label);
  return out;
}

bool below_blocks_are_zero(const FlagMatrix& m) {
  const auto& el = m.basis.elements;
  for (std::size_t r = 0; r < el.size(); ++r)
    for (std::size_t c = 0; c < el.size(); ++c)
      if (el[r].weight > el[c].weight && m.entries(r, c) != 0) return false;
  return true;
}

std::set<Rational> values(const std::vector<SpectrumEntry>& entries) {
  std::set<Rational> out;
  for (auto& e : entries) out.insert(e.eigenvalue);
  return out;
}

}  // namespace

TEST_CASE("bases and their block structure") {
  auto so4 = basis_for(GroupMode::so4(), BasisId::So4, 4);
  CHECK(labels(so4) == std::vector<std::string>{"p_0", "p_1", "p_1^2", "p_2", "p_1^3", "p_1 p_2", "p_1^4",
                                                "p_1^2 p_2", "p_2^2"});
  CHECK(so4.block_starts == std::vector<std::size_t>{0, 1, 2, 4, 6, 9});
  CHECK(basis_for(GroupMode::so3(), BasisId::So3PowersOfTrace, 6).size() == 7);
  CHECK(labels(basis_for(GroupMode::so3(), BasisId::So3TracesOfPowers, 2)) ==
        std::vector<std::string>{"p_0", "p_1", "p_2"});
  auto parts = basis_for(GroupMode::general_at(5), BasisId::Partitions, 4);
  CHECK(parts.size() == 1 + 1 + 2 + 3 + 5);
  CHECK(parts.elements[2].label == "p_{(2,0)}");
  CHECK_THROWS_AS(basis_for(GroupMode::so3(), BasisId::So4, 3), std::invalid_argument);
  CHECK_THROWS_AS(basis_for(GroupMode::so4(), BasisId::So3PowersOfTrace, 3), std::invalid_argument);
  CHECK(parse_basis_id("btrace") == BasisId::So3TracesOfPowers);
  CHECK_THROWS_AS(parse_basis_id("nope"), std::invalid_argument);
}

TEST_CASE("coordinates round-trip through the basis") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> c(-5, 5);
  for (auto [mode, id] : {std::pair{GroupMode::so4(), BasisId::So4}, {GroupMode::so3(), BasisId::So3TracesOfPowers},
                          {GroupMode::so3(), BasisId::So3PowersOfTrace}}) {
    auto basis = basis_for(mode, id, 6);
    for (int t = 0; t < 10; ++t) {
      std::vector<Rational> coords;
      TracePoly f(mode);
      for (auto& e : basis.elements) {
        coords.push_back(q(c(rng), 1 + t % 4));
        f += e.function * NPoly(coords.back());
      }
      CHECK(coordinates(basis, f) == coords);
    }
  }
  CHECK_THROWS_AS(coordinates(basis_for(GroupMode::so4(), BasisId::So4, 2), th::S4(3, 0)), std::runtime_error);
}

TEST_CASE("SO(4) matrices are block upper triangular and nested") {
  FlagMatrix prev = build_matrix(GroupMode::so4(), BasisId::So4, 0);
  for (unsigned k = 1; k <= 8; ++k) {
    CAPTURE(k);
    FlagMatrix m = build_matrix(GroupMode::so4(), BasisId::So4, k);
    CHECK(below_blocks_are_zero(m));
    const std::size_t s = prev.basis.size();
    CHECK(m.entries.block(0, 0, s, s) == prev.entries);
    CHECK(build_matrix_closed(GroupMode::so4(), BasisId::So4, k).entries == m.entries);
    prev = m;
  }
}

TEST_CASE("SO(3) matrices follow the reference patterns") {
  for (unsigned k = 0; k <= 10; ++k) {
    CAPTURE(k);
    FlagMatrix bp = build_matrix(GroupMode::so3(), BasisId::So3PowersOfTrace, k);
    FlagMatrix bt = build_matrix(GroupMode::so3(), BasisId::So3TracesOfPowers, k);
    CHECK(build_matrix_closed(GroupMode::so3(), BasisId::So3PowersOfTrace, k).entries == bp.entries);
    CHECK(build_matrix_closed(GroupMode::so3(), BasisId::So3TracesOfPowers, k).entries == bt.entries);
    for (unsigned r = 0; r <= k; ++r)
      for (unsigned c = 0; c <= k; ++c) {
        CAPTURE(r);
        CAPTURE(c);
        Rational expected_bp = 0, expected_bt = 0;
        if (r == c) expected_bp = q(-static_cast<long>(c * (c + 1)), 2);
        if (c >= 2 && r == c - 1) expected_bp = q(c * (c - 1));
        // the constant 3/2 c(c-1) p_1^0 is (c(c-1)/2) p_0
        if (c >= 2 && r == c - 2) expected_bp = r == 0 ? q(c * (c - 1), 2) : q(3 * c * (c - 1), 2);
        if (r == c) expected_bt = q(-static_cast<long>(c * (c + 1)), 2);
        if (r == 0 && c >= 2) expected_bt = q(c * (c - 1), 2);
        if (r >= 1 && r < c) expected_bt = -q(c);
        CHECK(bp.entries(r, c) == expected_bp);
        CHECK(bt.entries(r, c) == expected_bt);
      }
  }
}

TEST_CASE("fixed-N spanning-set matrix matches the symbolic Laplacians") {
  FlagMatrix m = build_matrix(GroupMode::general_at(5), BasisId::Partitions, 4);
  CHECK(below_blocks_are_zero(m));
  for (std::size_t c = 0; c < m.basis.size(); ++c) {
    TracePoly sum(GroupMode::general_at(5));
    for (std::size_t r = 0; r < m.basis.size(); ++r) sum += m.basis.elements[r].function * NPoly(m.entries(r, c));
    CHECK(sum == lap(m.basis.elements[c].function, GroupMode::general_at(5)));
  }
  ExpressionTable t = build_expression_table(3);
  REQUIRE(t.columns.size() == t.basis.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    TracePoly sum;
    for (std::size_t r = 0; r < t.columns[c].size(); ++r) sum += t.basis.elements[r].function * t.columns[c][r];
    CHECK(sum == lap(t.basis.elements[c].function, GroupMode::general()));
  }
}

TEST_CASE("closed-form spectra") {
  auto sphere = spectrum_closed({SpectrumKind::Sphere, 3}, 3);
  REQUIRE(sphere.size() == 4);
  CHECK(sphere[3].eigenvalue == -6);
  CHECK(spectrum_closed({SpectrumKind::Sphere, 5}, 2).back().eigenvalue == -5);
  auto so3 = spectrum_closed({SpectrumKind::SO3, 3}, 4);
  CHECK(values(so3) == std::set<Rational>{0, -1, -3, -6, -10});
  CHECK(so3.front().eigenvalue == 0);
  auto so4 = spectrum_closed({SpectrumKind::SO4, 4}, 6);
  auto twelve = std::find_if(so4.begin(), so4.end(), [](auto& e) { return e.eigenvalue == -12; });
  REQUIRE(twelve != so4.end());
  CHECK(twelve->labels.size() == 2);
  CHECK(values(spectrum_closed({SpectrumKind::SO4, 4}, 4)) ==
        std::set<Rational>{0, q(-3, 2), -2, -4, q(-9, 2), q(-15, 2), -6, -8, -12});
  for (std::size_t i = 1; i < so4.size(); ++i) CHECK(so4[i - 1].eigenvalue > so4[i].eigenvalue);
}

TEST_CASE("exact eigenvalues sit inside the closed-form spectra") {
  for (unsigned k = 0; k <= 8; ++k) {
    CAPTURE(k);
    auto found = values(eigenvalues_exact(build_matrix(GroupMode::so4(), BasisId::So4, k)));
    auto closed = values(spectrum_closed({SpectrumKind::SO4, 4}, k));
    CHECK(found == closed);
  }
  auto so3 = eigenvalues_exact(build_matrix(GroupMode::so3(), BasisId::So3TracesOfPowers, 5));
  REQUIRE(so3.size() == 6);
  for (auto& e : so3) {
    CHECK(e.algebraic_multiplicity == 1);
    CHECK(e.geometric_multiplicity == 1);
  }
  CHECK_THROWS_AS(eigenvalues_exact(build_matrix(GroupMode::general_at(5), BasisId::Partitions, 2)),
                  std::invalid_argument);
}

TEST_CASE("eigenspaces") {
  FlagMatrix m = build_matrix(GroupMode::so4(), BasisId::So4, 6);
  auto space = eigenspace_exact(m, -12);
  CHECK(space.size() == 2);
  for (auto& v : space) {
    auto first = std::find_if(v.begin(), v.end(), [](auto& x) { return x != 0; });
    REQUIRE(first != v.end());
    CHECK(*first == 1);
    auto image = m.entries * v;
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(image[i] == v[i] * -12);
  }
  CHECK_THROWS_AS(eigenspace_exact(m, 7), std::invalid_argument);
}

TEST_CASE("a block with an irrational spectrum is a hard error") {
  FlagMatrix m{basis_for(GroupMode::so4(), BasisId::So4, 2), RationalMatrix(4, 4)};
  m.entries(2, 3) = 2;
  m.entries(3, 2) = 1;
  CHECK_THROWS_AS(eigenvalues_exact(m), std::runtime_error);
}
