#include "borel/render.hpp"

#include <algorithm>
#include <sstream>

namespace borel {

std::string render_var(int index, int nvars) {
  if (nvars <= 26) return std::string(1, static_cast<char>('a' + index - 1));
  return "x" + std::to_string(index);
}

std::string render_monomial(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int i = 1; i <= m.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += render_var(i, m.nvars());
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string render_ideal(const BorelIdeal& b) {
  std::string out = b.is_squarefree_kind() ? "sfborel{" : "borel{";
  bool first = true;
  for (const Monomial& m : b.bgens()) {
    if (!first) out += ",";
    out += render_monomial(m);
    first = false;
  }
  out += "}@" + std::to_string(b.nvars());
  return out;
}

namespace {

// "14t^8" with the usual elisions; empty sign position for leading terms.
std::string monomial_term(const BigInt& coeff, const std::string& var, int degree) {
  BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
  std::string out;
  if (degree == 0) return mag.str();
  if (mag != 1) out += mag.str();
  out += var;
  if (degree > 1) out += "^" + std::to_string(degree);
  return out;
}

} // namespace

std::string render_unipoly(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p.coeff(k);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    out += monomial_term(c, var, k);
  }
  return out;
}

std::string render_hilbert_terms(const HilbertSeries& series) {
  if (series.terms.empty()) return "0";
  std::string out;
  for (const auto& term : series.terms) {
    if (!out.empty()) out += " + ";
    out += monomial_term(term.coeff, "t", term.degree);
    if (term.pole == 1)
      out += "/(1-t)";
    else if (term.pole > 1)
      out += "/(1-t)^" + std::to_string(term.pole);
  }
  return out;
}

std::string render_hilbert_normal_form(const HilbertSeries& series) {
  std::string out = render_unipoly(series.h);
  if (series.dim == 1)
    out += " / (1-t)";
  else if (series.dim > 1)
    out += " / (1-t)^" + std::to_string(series.dim);
  return out;
}

std::string render_bipoly(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::pair<int, int>, BigInt>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second;
    int db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [key, c] : terms) {
    const auto [ti, uj] = key;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    BigInt mag = c < 0 ? BigInt(-c) : c;
    std::string body;
    if (ti > 0) {
      body += "t";
      if (ti > 1) body += "^" + std::to_string(ti);
    }
    if (uj > 0) {
      body += "u";
      if (uj > 1) body += "^" + std::to_string(uj);
    }
    if (body.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += body;
    }
  }
  return out;
}

namespace {

std::string pad_left(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

} // namespace

std::string render_betti_table(const BettiTable& table) {
  const int cols = table.max_homological_index();
  const int rows = table.max_row();
  std::vector<BigInt> totals = table.totals();

  // cell text, "." for zero
  auto cell = [&](int i, int r) -> std::string {
    const BigInt& v = table.entry(i, i + r);
    return v == 0 ? "." : v.str();
  };

  std::vector<size_t> width(static_cast<size_t>(cols) + 1, 1);
  for (int i = 0; i <= cols; ++i) {
    width[static_cast<size_t>(i)] =
        std::max(width[static_cast<size_t>(i)], totals[static_cast<size_t>(i)].str().size());
    for (int r = 0; r <= rows; ++r)
      width[static_cast<size_t>(i)] = std::max(width[static_cast<size_t>(i)], cell(i, r).size());
  }

  size_t label_width = std::string("total:").size();
  for (int r = 0; r <= rows; ++r)
    label_width = std::max(label_width, std::to_string(r).size() + 1);

  std::ostringstream out;
  out << pad_left("total:", label_width);
  for (int i = 0; i <= cols; ++i)
    out << ' ' << pad_left(totals[static_cast<size_t>(i)].str(), width[static_cast<size_t>(i)]);
  out << '\n';
  for (int r = 0; r <= rows; ++r) {
    out << pad_left(std::to_string(r) + ":", label_width);
    for (int i = 0; i <= cols; ++i)
      out << ' ' << pad_left(cell(i, r), width[static_cast<size_t>(i)]);
    out << '\n';
  }
  return out.str();
}

std::string render_catalan_diagram(const CatalanDiagram& diagram) {
  const auto& rows = diagram.rows;
  size_t ncols = 0;
  for (const auto& row : rows) ncols = std::max(ncols, row.size());
  std::vector<size_t> width(ncols, 1);
  for (const auto& row : rows)
    for (size_t k = 0; k < row.size(); ++k)
      width[k] = std::max(width[k], row[k].str().size());

  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out << ' ';
      out << pad_left(row[k].str(), width[k]);
    }
    out << '\n';
  }
  out << "w:";
  for (const BigInt& v : diagram.bottom_row()) out << ' ' << v.str();
  out << '\n';
  return out.str();
}

std::string render_stanley(const StanleyDecomposition& decomp) {
  std::ostringstream out;
  for (const StanleySummand& s : decomp.summands) {
    out << render_monomial(s.base) << " : [";
    for (size_t k = 0; k < s.vars.size(); ++k) {
      if (k > 0) out << ',';
      out << render_var(s.vars[k], decomp.ambient.nvars());
    }
    out << "]\n";
  }
  return out.str();
}

std::string render_primes(const std::vector<int>& ps) {
  std::string out;
  for (int p : ps) {
    if (!out.empty()) out += ' ';
    out += "P" + std::to_string(p);
  }
  return out;
}

std::string render_bigint_row(const std::vector<BigInt>& row) {
  std::string out;
  for (const BigInt& v : row) {
    if (!out.empty()) out += ' ';
    out += v.str();
  }
  return out;
}

} // namespace borel
