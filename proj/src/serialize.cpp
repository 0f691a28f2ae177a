#include "su3braid/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace su3braid {

json cyclo_to_json(const Cyclo& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(format_rational(c));
  const auto z = to_float(x);
  return {{"order", x.order()}, {"coeffs", coeffs}, {"approx", {z.real(), z.imag()}}};
}

Cyclo cyclo_from_json(const json& j) {
  const int order = j.at("order").get<int>();
  std::vector<Rational> poly;
  for (const auto& c : j.at("coeffs")) poly.push_back(parse_rational(c.get<std::string>()));
  if (static_cast<long>(poly.size()) != euler_phi(order)) {
    throw std::invalid_argument("coefficient count does not match phi(order)");
  }
  return Cyclo::from_poly(order, std::move(poly));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  json float_rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    json frow = json::array();
    for (int k = 0; k < m.dim(); ++k) {
      row.push_back(cyclo_to_json(m(i, k)));
      const auto z = to_float(m(i, k));
      frow.push_back({z.real(), z.imag()});
    }
    rows.push_back(std::move(row));
    float_rows.push_back(std::move(frow));
  }
  return {{"dim", m.dim()}, {"rows", rows}, {"float_rows", float_rows}};
}

Matrix matrix_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  Matrix m(dim);
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != dim) throw std::invalid_argument("row count != dim");
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim) throw std::invalid_argument("column count != dim");
    for (int k = 0; k < dim; ++k) m(i, k) = cyclo_from_json(rows[i][k]);
  }
  return m;
}

json elements_to_json(const FiniteMatrixGroup& group, const std::vector<std::string>& names) {
  json out = json::array();
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto& e = group[i];
    out.push_back({{"index", i},
                   {"key", e.key},
                   {"word", e.word ? format_word(*e.word, names) : ""},
                   {"matrix", matrix_to_json(e.matrix.matrix())}});
  }
  return out;
}

std::string cayley_csv(const FiniteMatrixGroup& group) {
  const CayleyTable table(group);
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      if (j != 0) out += ',';
      out += std::to_string(table.at(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

void write_elements(const FiniteMatrixGroup& group, const std::vector<std::string>& names,
                    const std::string& path) {
  write_file(path, elements_to_json(group, names).dump(1) + "\n");
}

void write_cayley(const FiniteMatrixGroup& group, const std::string& path) {
  write_file(path, cayley_csv(group));
}

std::string describe(const Cyclo& x) {
  std::ostringstream os;
  bool first = true;
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (!first) os << (sgn(c[i]) < 0 ? " - " : " + ");
    else if (sgn(c[i]) < 0) os << "-";
    first = false;
    const Rational a = abs(c[i]);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << x.order();
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  const auto z = to_float(x);
  char buf[96];
  std::snprintf(buf, sizeof buf, "  ~ %.12g %+.12gi", z.real() == 0 ? 0.0 : z.real(),
                z.imag() == 0 ? 0.0 : z.imag());
  os << buf;
  return os.str();
}

}  // namespace su3braid
