#include "soflag/flagmatrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "soflag/laplacian.hpp"

namespace soflag {

std::string_view basis_id_name(BasisId id) {
  switch (id) {
    case BasisId::Partitions: return "partitions";
    case BasisId::So3PowersOfTrace: return "bprime";
    case BasisId::So3TracesOfPowers: return "btrace";
    case BasisId::So4: return "so4";
  }
  return "?";
}

BasisId parse_basis_id(std::string_view name) {
  if (name == "partitions") return BasisId::Partitions;
  if (name == "bprime") return BasisId::So3PowersOfTrace;
  if (name == "btrace") return BasisId::So3TracesOfPowers;
  if (name == "so4") return BasisId::So4;
  throw std::invalid_argument("unknown basis id '" + std::string(name) + "'");
}

namespace {

std::string p1p2_label(unsigned l, unsigned m) {
  std::string out;
  if (l) out += l == 1 ? "p_1" : "p_1^" + std::to_string(l);
  if (m) {
    if (!out.empty()) out += " ";
    out += m == 1 ? "p_2" : "p_2^" + std::to_string(m);
  }
  return out;
}

void check_basis_fits_mode(GroupMode mode, BasisId id) {
  bool ok = false;
  switch (mode.tag) {
    case GroupTag::GeneralN: ok = id == BasisId::Partitions; break;
    case GroupTag::SO3: ok = id == BasisId::So3PowersOfTrace || id == BasisId::So3TracesOfPowers; break;
    case GroupTag::SO4: ok = id == BasisId::So4; break;
  }
  if (!ok)
    throw std::invalid_argument("basis '" + std::string(basis_id_name(id)) + "' is not available in mode " +
                                mode.name());
}

}  // namespace

FlagBasis basis_for(GroupMode mode, BasisId id, unsigned k) {
  check_basis_fits_mode(mode, id);
  FlagBasis b{mode, id, k, {}, {}};
  b.block_starts.push_back(0);
  b.elements.push_back({"p_0", 0, TracePoly::power_sum(0, mode)});
  for (unsigned w = 1; w <= k; ++w) {
    b.block_starts.push_back(b.elements.size());
    switch (id) {
      case BasisId::So3PowersOfTrace:
        b.elements.push_back({p1p2_label(w, 0), w, TracePoly::p1_p2(w, 0, mode)});
        break;
      case BasisId::So3TracesOfPowers:
        b.elements.push_back({"p_" + std::to_string(w), w, so3_pm_in_p1(w)});
        break;
      case BasisId::So4:
        for (unsigned m = 0; 2 * m <= w; ++m)
          b.elements.push_back({p1p2_label(w - 2 * m, m), w, TracePoly::p1_p2(w - 2 * m, m, mode)});
        break;
      case BasisId::Partitions:
        for (auto& lambda : enumerate_exact(w)) {
          auto f = TracePoly::monomial(lambda, NPoly(1), mode);
          b.elements.push_back({f.pretty(), w, f});
        }
        break;
    }
  }
  b.block_starts.push_back(b.elements.size());
  return b;
}

namespace {

std::size_t index_of_key(const FlagBasis& basis, const Partition& key) {
  for (std::size_t i = 1; i < basis.elements.size(); ++i) {
    const auto& terms = basis.elements[i].function.terms();
    if (terms.size() == 1 && terms.begin()->first == key) return i;
  }
  throw std::runtime_error("term p_{" + key.to_string() + "} is outside " + std::string(basis_id_name(basis.id)) +
                           " of order " + std::to_string(basis.k));
}

}  // namespace

std::vector<Rational> coordinates(const FlagBasis& basis, const TracePoly& f) {
  if (basis.mode.symbolic()) throw std::invalid_argument("coordinates need a numeric basis; use build_expression_table");
  switch (basis.id) {
    case BasisId::So3PowersOfTrace:
      return so3_basis_change(f, So3Basis::PowersOfTrace, basis.k);
    case BasisId::So3TracesOfPowers:
      return so3_basis_change(f, So3Basis::TracesOfPowers, basis.k);
    case BasisId::So4:
    case BasisId::Partitions: break;
  }
  TracePoly g = basis.id == BasisId::So4 && !(f.mode() == basis.mode) ? reduce(f, basis.mode) : f;
  if (!(g.mode() == basis.mode)) throw std::invalid_argument("coordinates: polynomial mode " + g.mode().name() +
                                                             " does not match basis mode " + basis.mode.name());
  std::vector<Rational> out(basis.size(), Rational(0));
  for (auto& [key, c] : g.terms()) {
    if (key.empty()) {
      out[0] += c.constant_value() / basis.mode.numeric_n;
    } else {
      out[index_of_key(basis, key)] += c.constant_value();
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> FlagMatrix::block_range(unsigned weight) const {
  if (weight > basis.k) throw std::out_of_range("weight beyond flag order");
  return {basis.block_starts[weight], basis.block_starts[weight + 1]};
}

RationalMatrix FlagMatrix::diagonal_block(unsigned weight) const {
  auto [lo, hi] = block_range(weight);
  return entries.block(lo, lo, hi - lo, hi - lo);
}

namespace {

void assert_block_triangular(const FlagMatrix& m) {
  const auto& el = m.basis.elements;
  for (std::size_t c = 0; c < el.size(); ++c)
    for (std::size_t r = 0; r < el.size(); ++r)
      if (el[r].weight > el[c].weight && m.entries(r, c) != 0)
        throw std::logic_error("flag matrix is not block triangular at (" + el[r].label + ", " + el[c].label + ")");
}

FlagMatrix assemble(const FlagBasis& basis, auto&& column_of) {
  FlagMatrix m{basis, RationalMatrix(basis.size(), basis.size())};
  for (std::size_t c = 0; c < basis.size(); ++c) {
    std::vector<Rational> col = column_of(c);
    for (std::size_t r = 0; r < basis.size(); ++r) m.entries(r, c) = col[r];
  }
  assert_block_triangular(m);
  return m;
}

}  // namespace

FlagMatrix build_matrix(GroupMode mode, BasisId id, unsigned k) {
  if (mode.symbolic()) throw std::invalid_argument("build_matrix needs a numeric mode; use build_expression_table");
  FlagBasis basis = basis_for(mode, id, k);
  return assemble(basis, [&](std::size_t c) { return coordinates(basis, lap(basis.elements[c].function, mode)); });
}

FlagMatrix build_matrix_closed(GroupMode mode, BasisId id, unsigned k) {
  FlagBasis basis = basis_for(mode, id, k);
  switch (id) {
    case BasisId::So3PowersOfTrace:
      return assemble(basis, [&](std::size_t c) { return coordinates(basis, lap_so3_closed(basis.elements[c].function)); });
    case BasisId::So3TracesOfPowers:
      return assemble(basis, [&](std::size_t c) {
        // Read the closed form's p_0, p_1, ..., p_m coefficients directly.
        TracePoly d = lap_so3_pm_closed(static_cast<unsigned>(c));
        std::vector<Rational> col(basis.size(), Rational(0));
        for (auto& [key, coeff] : d.terms()) {
          if (key.empty()) col[0] += coeff.constant_value() / 3;
          else col[key.parts()[0]] += coeff.constant_value();
        }
        return col;
      });
    case BasisId::So4:
      return assemble(basis, [&](std::size_t c) { return coordinates(basis, lap_so4_closed(basis.elements[c].function)); });
    case BasisId::Partitions: break;
  }
  throw std::invalid_argument("no closed-form Laplacian for the partition spanning set");
}

ExpressionTable build_expression_table(unsigned k) {
  ExpressionTable t{basis_for(GroupMode::general(), BasisId::Partitions, k), {}};
  for (auto& el : t.basis.elements) {
    TracePoly d = lap(el.function, GroupMode::general());
    std::vector<NPoly> col(t.basis.size());
    for (auto& [key, c] : d.terms()) {
      if (key.empty()) col[0] += c.divide_by_symbol();
      else col[index_of_key(t.basis, key)] += c;
    }
    t.columns.push_back(std::move(col));
  }
  return t;
}

std::string SpectrumLabel::to_string() const {
  if (params.size() == 1) return "k=" + std::to_string(params[0]);
  std::string out = "(j1,j2)=(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += soflag::to_string(make_rational(params[i], 2));
  }
  return out + ")";
}

std::vector<SpectrumEntry> spectrum_closed(SpectrumTarget target, unsigned bound) {
  std::map<Rational, SpectrumEntry, std::greater<>> by_value;
  auto add = [&](Rational v, SpectrumLabel label) {
    auto& e = by_value[v];
    e.eigenvalue = v;
    e.labels.push_back(std::move(label));
  };
  switch (target.kind) {
    case SpectrumKind::Sphere:
      if (target.n < 2) throw std::invalid_argument("sphere needs N >= 2");
      for (long k = 0; k <= static_cast<long>(bound); ++k) add(make_rational(-k * (k + target.n - 2), 2), {{unsigned(k)}});
      break;
    case SpectrumKind::SO3:
      for (long k = 0; k <= static_cast<long>(bound); ++k) add(make_rational(-k * (k + 1), 2), {{unsigned(k)}});
      break;
    case SpectrumKind::SO4:
      for (long k1 = 0; k1 <= static_cast<long>(bound); ++k1)
        for (long k2 = k1 % 2; k2 <= k1; k2 += 2)
          add(make_rational(-(k1 * (k1 + 2) + k2 * (k2 + 2)), 4), {{unsigned(k1), unsigned(k2)}});
      break;
  }
  std::vector<SpectrumEntry> out;
  for (auto& [v, e] : by_value) out.push_back(std::move(e));
  return out;
}

std::vector<SpectrumEntry> eigenvalues_exact(const FlagMatrix& m) {
  const GroupMode mode = m.basis.mode;
  if (mode.tag == GroupTag::GeneralN)
    throw std::invalid_argument("eigenvalues_exact: the GeneralN spanning set is not a basis");
  auto closed = spectrum_closed({mode.tag == GroupTag::SO3 ? SpectrumKind::SO3 : SpectrumKind::SO4, 4}, m.basis.k);

  std::vector<SpectrumEntry> out;
  auto find = [&](const Rational& v) {
    return std::find_if(out.begin(), out.end(), [&](const SpectrumEntry& e) { return e.eigenvalue == v; });
  };
  for (unsigned w = 0; w <= m.basis.k; ++w) {
    RationalPolynomial cp = characteristic_polynomial(m.diagonal_block(w));
    std::vector<Rational> roots;
    for (auto& c : closed)
      while (cp.degree() >= 1 && cp.deflate(c.eigenvalue)) roots.push_back(c.eigenvalue);
    if (cp.degree() >= 1) {
      RationalPolynomial rest;
      auto extra = rational_roots(cp, &rest);
      if (rest.degree() >= 1)
        throw std::runtime_error("block " + std::to_string(w) + " has an irrational factor " + rest.to_string());
      roots.insert(roots.end(), extra.begin(), extra.end());
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    for (auto& r : roots) {
      auto it = find(r);
      if (it == out.end()) {
        SpectrumEntry e;
        e.eigenvalue = r;
        for (auto& c : closed)
          if (c.eigenvalue == r) e.labels = c.labels;
        out.push_back(std::move(e));
        it = std::prev(out.end());
      }
      ++it->algebraic_multiplicity;
    }
  }
  for (auto& e : out) {
    RationalMatrix a = m.entries;
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= e.eigenvalue;
    e.geometric_multiplicity = nullspace(a).size();
  }
  return out;
}

std::vector<std::vector<Rational>> eigenspace_exact(const FlagMatrix& m, const Rational& lambda) {
  RationalMatrix a = m.entries;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= lambda;
  auto basis = nullspace(a);
  if (basis.empty()) throw std::invalid_argument(soflag::to_string(lambda) + " is not an eigenvalue of the flag matrix");
  for (auto& v : basis) {
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    Rational scale = 1 / *first;
    for (auto& x : v) x *= scale;
  }
  return basis;
}

}  // namespace soflag
