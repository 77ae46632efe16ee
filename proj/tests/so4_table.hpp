#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "helpers.hpp"

// The order-4 SO(4) package: matrix, eigenpairs and characters as ref.
namespace th {

inline const std::vector<std::vector<std::string>> kSo4Matrix = {
    {"0", "0", "1", "1", "0", "0", "0", "0", "8"},
    {"0", "-3/2", "0", "0", "12", "0", "0", "0", "0"},
    {"0", "0", "-3", "-1", "0", "0", "24", "-4", "-16"},
    {"0", "0", "-1", "-3", "0", "0", "0", "4", "8"},
    {"0", "0", "0", "0", "-9/2", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "-3", "-15/2", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-6", "1", "2"},
    {"0", "0", "0", "0", "0", "0", "-6", "-12", "-6"},
    {"0", "0", "0", "0", "0", "0", "0", "-1", "-8"},
};

struct PrintedEigenpair {
  std::string eigenvalue;
  std::vector<std::string> vector;
};

inline const std::vector<PrintedEigenpair> kSo4Eigenpairs = {
    {"0", {"1", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {"-3/2", {"0", "2", "0", "0", "0", "0", "0", "0", "0"}},
    {"-2", {"0", "0", "1/2", "-1/2", "0", "0", "0", "0", "0"}},
    {"-4", {"-1/2", "0", "1", "1", "0", "0", "0", "0", "0"}},
    {"-9/2", {"0", "-2", "0", "0", "1/2", "-1/2", "0", "0", "0"}},
    {"-15/2", {"0", "0", "0", "0", "0", "2", "0", "0", "0"}},
    {"-6", {"0", "0", "-3/2", "-1/2", "0", "0", "1/4", "-1/2", "1/4"}},
    {"-8", {"1/2", "0", "-2", "0", "0", "0", "1/4", "0", "-1/4"}},
    {"-12", {"-1/2", "0", "3", "-1", "0", "0", "-1/2", "2", "1/2"}},
};

/// (k1, k2, chi) with j1 = k1/2, j2 = k2/2; constants are plain values (p_0 = 4).
inline std::vector<std::tuple<unsigned, unsigned, TracePoly>> so4_reference_characters() {
  const auto m = GroupMode::so4();
  auto c = [&](long num, long den = 1) { return constant(q(num, den), m); };
  auto s = [](unsigned l, unsigned mm, long num, long den = 1) { return S4(l, mm) * NPoly(q(num, den)); };
  return {
      {0, 0, c(4)},
      {1, 1, s(1, 0, 2)},
      {2, 0, s(2, 0, 1, 2) + s(0, 1, -1, 2)},
      {2, 2, c(-2) + s(2, 0, 1) + s(0, 1, 1)},
      {3, 1, s(1, 0, -2) + s(3, 0, 1, 2) + s(1, 1, -1, 2)},
      {3, 3, s(1, 1, 2)},
      {4, 0, s(2, 0, -3, 2) + s(0, 1, -1, 2) + s(4, 0, 1, 4) + s(2, 1, -1, 2) + s(0, 2, 1, 4)},
      {4, 2, c(2) + s(2, 0, -2) + s(4, 0, 1, 4) + s(0, 2, -1, 4)},
      {4, 4, c(-2) + s(2, 0, 3) + s(0, 1, -1) + s(4, 0, -1, 2) + s(2, 1, 2) + s(0, 2, 1, 2)},
  };
}

}  // namespace th
