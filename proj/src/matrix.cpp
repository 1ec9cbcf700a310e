#include "ainfty/matrix.hpp"

#include <numeric>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

template <typename F>
std::string render_grid(const std::vector<std::vector<OpExpr>>& rows, F&& text) {
  std::string out = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ' ';
      out += text(rows[r][c]);
    }
  }
  return out + "]";
}

}  // namespace

std::string to_string(const Point& p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }
std::string to_string(const Arrow& a) { return to_string(a.start) + "→" + to_string(a.end); }

Monomial::Monomial(std::vector<std::vector<OpExpr>> rows) : Monomial(std::move(rows), false) {}

Monomial Monomial::from_normal(std::vector<std::vector<OpExpr>> rows) { return Monomial(std::move(rows), true); }

Monomial::Monomial(std::vector<std::vector<OpExpr>> rows, bool normalized) {
  if (rows.empty() || rows.front().empty()) throw InvariantViolation("a monomial needs at least one entry");
  const std::size_t p = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != p) throw InvariantViolation("ragged monomial");
  }
  for (std::size_t c = 0; c < p; ++c) x_.push_back(rows.front()[c].inputs());
  for (const auto& r : rows) y_.push_back(r.front().outputs());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t c = 0; c < p; ++c) {
      auto& e = rows[k][c];
      if (e.inputs() != x_[c] || e.outputs() != y_[k]) {
        throw InvariantViolation("entry " + e.str() + " breaks the row/column arities of the monomial");
      }
      if (!normalized) e = normalize(e);
    }
  }
  entries_ = std::move(rows);
  key_ = render_grid(entries_, [](const OpExpr& e) { return e.str(); });
}

Monomial Monomial::column(const std::vector<OpExpr>& entries) {
  std::vector<std::vector<OpExpr>> rows;
  for (const auto& e : entries) rows.push_back({e});
  return Monomial(std::move(rows));
}

Monomial Monomial::row(const std::vector<OpExpr>& entries) { return Monomial({entries}); }

int Monomial::total_inputs() const { return sum(x_); }
int Monomial::total_outputs() const { return sum(y_); }

Arrow Monomial::arrow() const { return {{total_inputs(), rows()}, {cols(), total_outputs()}}; }

std::string Monomial::ascii() const {
  return render_grid(entries_, [](const OpExpr& e) { return e.ascii(); });
}

bool is_tp(const Monomial& a, const Monomial& b) {
  if (a.cols() != 1 || b.rows() != 1) return false;
  return a.x().front() == b.cols() && b.y().front() == a.rows();
}

std::optional<BlockDecomp> btp_decompose(const Monomial& a, const Monomial& b) {
  // initial point of A must be the terminal point of B
  if (a.arrow().start != b.arrow().end) return std::nullopt;
  return BlockDecomp{b.y(), a.x()};
}

OpExpr gamma(const std::vector<OpExpr>& thetas, const std::vector<OpExpr>& etas) {
  const int q = static_cast<int>(thetas.size());
  const int p = static_cast<int>(etas.size());
  if (q == 0 || p == 0) throw TransversalityError("γ needs a nonempty column and row");
  for (const auto& t : thetas) {
    if (t.inputs() != p) throw TransversalityError("column entry " + t.str() + " does not have " + std::to_string(p) + " inputs");
  }
  for (const auto& e : etas) {
    if (e.outputs() != q) throw TransversalityError("row entry " + e.str() + " does not have " + std::to_string(q) + " outputs");
  }
  return normalize(OpExpr::compose({OpExpr::tensor(thetas), OpExpr::sigma(q, p), OpExpr::tensor(etas)}));
}

MatrixSum upsilon(const Monomial& a, const Monomial& b) {
  const auto blocks = btp_decompose(a, b);
  if (!blocks) return {};
  const auto& u = blocks->u;
  const auto& v = blocks->v;
  std::vector<std::vector<OpExpr>> out;
  int row0 = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<OpExpr> line;
    int col0 = 0;
    for (std::size_t l = 0; l < v.size(); ++l) {
      std::vector<OpExpr> thetas, etas;
      for (int k = 0; k < u[i]; ++k) thetas.push_back(a.at(row0 + k, static_cast<int>(l)));
      for (int k = 0; k < v[l]; ++k) etas.push_back(b.at(static_cast<int>(i), col0 + k));
      line.push_back(gamma(thetas, etas));
      col0 += v[l];
    }
    out.push_back(std::move(line));
    row0 += u[i];
  }
  return {Monomial::from_normal(std::move(out))};
}

MatrixSum upsilon(const MatrixSum& a, const MatrixSum& b) {
  MatrixSum out;
  for (const auto& x : a)
    for (const auto& y : b) out += upsilon(x, y);
  return out;
}

MatrixSum wedge_cross(const Monomial& a, const Monomial& b) {
  if (a.x() != b.x()) return {};
  auto rows = a.entries();
  rows.insert(rows.end(), b.entries().begin(), b.entries().end());
  return {Monomial::from_normal(std::move(rows))};
}

MatrixSum wedge_cross(const MatrixSum& a, const MatrixSum& b) {
  MatrixSum out;
  for (const auto& x : a)
    for (const auto& y : b) out += wedge_cross(x, y);
  return out;
}

MatrixSum cech_cross(const Monomial& a, const Monomial& b) {
  if (a.y() != b.y()) return {};
  auto rows = a.entries();
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].insert(rows[r].end(), b.entries()[r].begin(), b.entries()[r].end());
  return {Monomial::from_normal(std::move(rows))};
}

MatrixSum cech_cross(const MatrixSum& a, const MatrixSum& b) {
  MatrixSum out;
  for (const auto& x : a)
    for (const auto& y : b) out += cech_cross(x, y);
  return out;
}

std::vector<std::string> render_terms(const MatrixSum& s, bool ascii) {
  std::vector<std::string> out;
  for (const auto& m : s) {
    if (m.rows() == 1 && m.cols() == 1)
      out.push_back(ascii ? m.at(0, 0).ascii() : m.at(0, 0).str());
    else
      out.push_back(ascii ? m.ascii() : m.str());
  }
  return out;
}

}  // namespace ainfty
