#include "soflag/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace soflag::io {

GroupMode parse_mode(const std::string& name) {
  if (name == "so3") return GroupMode::so3();
  if (name == "so4") return GroupMode::so4();
  if (name == "generaln") return GroupMode::general();
  const std::string prefix = "generaln@";
  if (name.rfind(prefix, 0) == 0) return GroupMode::general_at(std::stoi(name.substr(prefix.size())));
  throw std::invalid_argument("unknown mode '" + name + "'");
}

json to_json(const NPoly& c) {
  json j = json::object();
  for (auto& [e, q] : c.coefficients()) j[std::to_string(e)] = to_string(q);
  return j;
}

NPoly npoly_from_json(const json& j) {
  std::map<unsigned, Rational> coeffs;
  for (auto& [e, q] : j.items()) coeffs[static_cast<unsigned>(std::stoul(e))] = parse_rational(q.get<std::string>());
  return NPoly::from_coefficients(std::move(coeffs));
}

json to_json(const TracePoly& f) {
  json terms = json::array();
  for (auto& [p, c] : f.terms()) {
    json parts = json::array();
    for (unsigned m : p.parts()) parts.push_back(m);
    terms.push_back({{"partition", parts}, {"coeff", to_json(c)}});
  }
  return terms;
}

TracePoly tracepoly_from_json(const json& j, GroupMode mode) {
  TracePoly f(mode);
  for (auto& rec : j) f.add_term(Partition(rec.at("partition").get<std::vector<unsigned>>()), npoly_from_json(rec.at("coeff")));
  return f;
}

json to_json(const FlagMatrix& m) {
  json basis = json::array();
  for (auto& e : m.basis.elements) basis.push_back(e.label);
  json rows = json::array();
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(to_string(m.entries(r, c)));
    rows.push_back(row);
  }
  return {{"mode", m.basis.mode.name()},
          {"basis_id", std::string(basis_id_name(m.basis.id))},
          {"k", m.basis.k},
          {"basis", basis},
          {"entries", rows}};
}

FlagMatrix matrix_from_json(const json& j) {
  GroupMode mode = parse_mode(j.at("mode").get<std::string>());
  BasisId id = parse_basis_id(j.at("basis_id").get<std::string>());
  FlagBasis basis = basis_for(mode, id, j.at("k").get<unsigned>());
  auto labels = j.at("basis").get<std::vector<std::string>>();
  if (labels.size() != basis.size()) throw std::invalid_argument("matrix JSON: basis size does not match header");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != basis.elements[i].label)
      throw std::invalid_argument("matrix JSON: basis label '" + labels[i] + "' at position " + std::to_string(i));
  const auto& rows = j.at("entries");
  RationalMatrix entries(basis.size(), basis.size());
  if (rows.size() != basis.size()) throw std::invalid_argument("matrix JSON: wrong row count");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != basis.size()) throw std::invalid_argument("matrix JSON: wrong column count");
    for (std::size_t c = 0; c < rows[r].size(); ++c) entries(r, c) = parse_rational(rows[r][c].get<std::string>());
  }
  return {std::move(basis), std::move(entries)};
}

json to_json(const ExpressionTable& t) {
  json basis = json::array();
  for (auto& e : t.basis.elements) basis.push_back(e.label);
  json cols = json::array();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    json col = json::array();
    for (auto& v : t.columns[c]) col.push_back(to_json(v));
    cols.push_back({{"generator", t.basis.elements[c].label}, {"laplacian", col}});
  }
  return {{"mode", t.basis.mode.name()}, {"basis_id", std::string(basis_id_name(t.basis.id))},
          {"k", t.basis.k},          {"basis", basis},
          {"columns", cols}};
}

json to_json(const SpectrumEntry& e) {
  json labels = json::array();
  for (auto& l : e.labels) labels.push_back(l.to_string());
  json out = {{"eigenvalue", to_string(e.eigenvalue)}, {"labels", labels}};
  if (e.algebraic_multiplicity > 0) {
    out["algebraic_multiplicity"] = e.algebraic_multiplicity;
    out["geometric_multiplicity"] = e.geometric_multiplicity;
  }
  return out;
}

json to_json(const Character& c) {
  json out = {{"group", c.group == GroupTag::SO3 ? "so3" : "so4"},
              {"label", c.label.to_string()},
              {"eigenvalue", to_string(c.eigenvalue)},
              {"pretty", c.poly.pretty()},
              {"poly", to_json(c.poly)}};
  if (c.trace_form) {
    out["trace_form_pretty"] = c.trace_form->pretty();
    out["trace_form"] = to_json(*c.trace_form);
  }
  return out;
}

namespace {

json vectors(const std::vector<std::vector<Rational>>& vs) {
  json out = json::array();
  for (auto& v : vs) {
    json row = json::array();
    for (auto& q : v) row.push_back(to_string(q));
    out.push_back(row);
  }
  return out;
}

}  // namespace

json to_json(const CharacterMatch& m) {
  json chars = json::array();
  for (auto& c : m.characters) chars.push_back(c.label.to_string());
  return {{"entry", to_json(m.entry)},
          {"characters", chars},
          {"coordinates", vectors(m.coordinates)},
          {"eigenspace", vectors(m.eigenspace)},
          {"unexplained_multiplicity", m.unexplained_multiplicity}};
}

json to_json(const numeric::VerificationReport& r) {
  return {{"target", r.target},           {"n", r.n},
          {"params", r.params},           {"samples", r.samples},
          {"seed", r.seed},               {"tol", r.tol},
          {"max_abs_err", r.max_abs_err}, {"max_rel_err", r.max_rel_err},
          {"pass", r.pass}};
}

std::string decimal(const Rational& q) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, to_double(q));
  return std::string(buf, res.ptr);
}

std::string latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = sgn(q) < 0 ? "-" : "";
  mpz_class num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_label(const std::string& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    out += label[i];
    if (label[i] != '^') continue;
    std::size_t end = i + 1;
    while (end < label.size() && std::isdigit(static_cast<unsigned char>(label[end]))) ++end;
    std::string exponent = label.substr(i + 1, end - i - 1);
    out += exponent.size() > 1 ? "{" + exponent + "}" : exponent;
    i = end - 1;
  }
  return out;
}

std::string matrix_csv(const FlagMatrix& m) {
  std::ostringstream os;
  os << "# mode=" << m.basis.mode.name() << "\n";
  os << "# basis_id=" << basis_id_name(m.basis.id) << "\n";
  os << "# k=" << m.basis.k << "\n";
  os << "# basis=";
  for (std::size_t i = 0; i < m.basis.size(); ++i) os << (i ? ";" : "") << m.basis.elements[i].label;
  os << "\n";
  os << "row,col,row_label,col_label,value,exact\n";
  for (std::size_t r = 0; r < m.entries.rows(); ++r)
    for (std::size_t c = 0; c < m.entries.cols(); ++c)
      os << r << "," << c << "," << m.basis.elements[r].label << "," << m.basis.elements[c].label << ","
         << decimal(m.entries(r, c)) << "," << to_string(m.entries(r, c)) << "\n";
  return os.str();
}

std::string matrix_latex(const FlagMatrix& m) {
  const std::size_t n = m.basis.size();
  std::ostringstream os;
  os << "\\begin{array}{c|" << std::string(n, 'c') << "}\n";
  for (auto& e : m.basis.elements) os << "&\\Delta " << latex_label(e.label) << " ";
  os << "\\\\\n\\hline\n";
  for (std::size_t r = 0; r < n; ++r) {
    os << latex_label(m.basis.elements[r].label);
    for (std::size_t c = 0; c < n; ++c) os << " & " << latex(m.entries(r, c));
    os << (r + 1 < n ? " \n\\\\\n" : "\n");
  }
  os << "\\end{array}\n";
  return os.str();
}

std::string matrix_pretty(const FlagMatrix& m) {
  const std::size_t n = m.basis.size();
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    cells[0][i + 1] = "D(" + m.basis.elements[i].label + ")";
    cells[i + 1][0] = m.basis.elements[i].label;
    for (std::size_t c = 0; c < n; ++c) cells[i + 1][c + 1] = to_string(m.entries(i, c));
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (auto& row : cells)
    for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  os << "mode=" << m.basis.mode.name() << " basis=" << basis_id_name(m.basis.id) << " k=" << m.basis.k << "\n";
  for (auto& row : cells) {
    for (std::size_t c = 0; c <= n; ++c) {
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
      if (c == 0) os << " |";
      if (c < n) os << " ";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace soflag::io
