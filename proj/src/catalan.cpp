#include "borel/catalan.hpp"

namespace borel {

BigInt CatalanDiagram::row_sum(int j) const {
  const auto& row = rows.at(static_cast<size_t>(j) - 1);
  BigInt sum = 0;
  for (const BigInt& v : row) sum += v;
  return sum;
}

CatalanDiagram catalan_diagram(const Monomial& shape) {
  if (shape.is_unit()) throw domain_error("Catalan diagram of 1 is undefined");
  const std::vector<int> widths = shape.factorization();
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(widths.size());
  rows.emplace_back(static_cast<size_t>(widths[0]), BigInt(1));
  for (size_t j = 1; j < widths.size(); ++j) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(static_cast<size_t>(widths[j]));
    BigInt prefix = 0;
    for (size_t k = 0; k < row.size(); ++k) {
      if (k < prev.size()) prefix += prev[k];
      row[k] = prefix;
    }
    rows.push_back(std::move(row));
  }
  return CatalanDiagram{shape, std::move(rows)};
}

WTable w_principal(const Monomial& m) {
  CatalanDiagram diagram = catalan_diagram(m);
  WTable w;
  const auto& bottom = diagram.bottom_row();
  for (size_t k = 0; k < bottom.size(); ++k)
    w.add(m.degree(), static_cast<int>(k) + 1, bottom[k]);
  return w;
}

WTable w_sq_principal(const Monomial& m) {
  if (!m.is_squarefree()) throw domain_error("w_sq_principal requires a squarefree monomial");
  if (m.is_unit()) throw domain_error("w-vector of the unit generator is undefined");
  const int d = m.degree();
  CatalanDiagram diagram = catalan_diagram(tau(m));
  WTable w;
  const auto& bottom = diagram.bottom_row();
  for (size_t k = 0; k < bottom.size(); ++k)
    w.add(d, static_cast<int>(k) + d, bottom[k]);
  return w;
}

} // namespace borel
