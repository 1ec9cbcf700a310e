#include "ainfty/biderivative.hpp"

#include <map>

#include "ainfty/errors.hpp"

namespace ainfty {

OmegaSpec OmegaSpec::standard(int I, int J, bool with_d) {
  if (I < 1 || J < 1) throw InvalidArity("ω bounds must be positive");
  return {OperationSet::standard(I, J, with_d), std::max(I, 2), std::max(J, 2)};
}

OmegaSpec OmegaSpec::algebra(int I) {
  OmegaSpec s = standard(I, 1);
  s.J = 1;
  return s;
}

OmegaSpec OmegaSpec::coalgebra(int J) {
  OmegaSpec s = standard(1, J);
  s.I = 1;
  return s;
}

MatrixSum OmegaSpec::as_sum() const {
  MatrixSum out;
  if (ops.d) out.toggle(Monomial::single(*ops.d));
  for (const auto& [i, m] : ops.m)
    if (i <= I) out.toggle(Monomial::single(m));
  for (const auto& [j, delta] : ops.delta)
    if (j <= J) out.toggle(Monomial::single(delta));
  return out;
}

const Relation* StructureEquation::find(Relation::Kind kind, int i, int j) const {
  for (const auto& r : relations) {
    if (r.kind == kind && r.i == i && r.j == j) return &r;
  }
  return nullptr;
}

MatrixSum bd0(const OpExpr& theta, int p_max, int q_max) {
  if (theta.inputs() != 1 || theta.outputs() != 1) {
    throw InvariantViolation("Bd₀ applies to operations of biarity (1,1), not " + theta.str());
  }
  MatrixSum out{Monomial::single(theta)};
  for (int q = 2; q <= q_max; ++q) {
    for (int at = 0; at < q; ++at) {
      std::vector<OpExpr> col(static_cast<std::size_t>(q), OpExpr::identity());
      col[static_cast<std::size_t>(at)] = theta;
      out.toggle(Monomial::column(col));
    }
  }
  for (int p = 2; p <= p_max; ++p) {
    for (int at = 0; at < p; ++at) {
      std::vector<OpExpr> row(static_cast<std::size_t>(p), OpExpr::identity());
      row[static_cast<std::size_t>(at)] = theta;
      out.toggle(Monomial::row(row));
    }
  }
  return out;
}

MatrixSum bd1(const OperationSet& ops, const Truncation& bounds, const Diagonal& diag) {
  MatrixSum out;
  for (const auto& [i, m] : ops.m) {
    if (i > bounds.max_in) continue;
    for (int k = 1; k <= bounds.max_out; ++k) out += xi_power(ops, k, Face::corolla(i), diag);
  }
  for (const auto& [j, delta] : ops.delta) {
    if (j > bounds.max_out) continue;
    for (int k = 1; k <= bounds.max_in; ++k) out += zeta_power(ops, k, Face::corolla(j), diag);
  }
  const Cochain phic = coderivation_cochain(ops);
  const Cochain psia = derivation_cochain(ops);
  for (int n = 3; n <= std::max(bounds.max_in, bounds.max_out); ++n) {
    for (const auto& f : faces_of(n)) {
      if (f.codim() != 1) continue;
      if (n <= bounds.max_in) out += phic(f);
      if (n <= bounds.max_out) out += psia(f);
    }
  }
  return out;
}

MatrixSum restricted_biderivative(const MatrixSum& t, const Truncation& bounds, const Diagonal& diag) {
  MatrixSum out;
  OperationSet ops;
  bool any_m1 = false;
  for (const auto& mono : t) {
    if (mono.rows() != 1 || mono.cols() != 1) continue;
    const OpExpr& e = mono.at(0, 0);
    if (e.inputs() == 1 && e.outputs() == 1) {
      out += bd0(e, bounds.max_in, bounds.max_out);
    } else if (e.outputs() == 1) {
      if (!ops.m.emplace(e.inputs(), e).second) {
        throw InvariantViolation("two operations of biarity (1," + std::to_string(e.inputs()) + ") in one argument");
      }
      any_m1 = true;
    } else if (e.inputs() == 1) {
      if (!ops.delta.emplace(e.outputs(), e).second) {
        throw InvariantViolation("two operations of biarity (" + std::to_string(e.outputs()) + ",1) in one argument");
      }
      any_m1 = true;
    }
  }
  if (any_m1) out += bd1(ops, bounds, diag);
  return out;
}

MatrixSum fraction_product(const MatrixSum& a, const MatrixSum& b, const Truncation& bounds, const Diagonal& diag) {
  return upsilon(restricted_biderivative(a, bounds, diag), restricted_biderivative(b, bounds, diag));
}

namespace {

std::string arity_label(const char* name, int n) { return std::string(name) + " " + std::to_string(n); }

}  // namespace

StructureEquation structure_equation_terms(const OmegaSpec& omega, const Diagonal& diag) {
  const MatrixSum components = restricted_biderivative(omega.as_sum(), omega.bounds(), diag);

  std::map<Point, std::vector<const Monomial*>> by_end;
  for (const auto& y : components) by_end[y.arrow().end].push_back(&y);

  std::map<Arrow, MatrixSum> groups;
  for (const auto& x : components) {
    auto it = by_end.find(x.arrow().start);
    if (it == by_end.end()) continue;
    for (const Monomial* y : it->second) {
      const MatrixSum product = upsilon(x, *y);
      if (!product.empty()) groups[Arrow{y->arrow().start, x.arrow().end}] += product;
    }
  }

  StructureEquation out;
  for (auto& [arrow, sum] : groups) {
    if (sum.empty()) continue;
    Relation r;
    r.arrow = arrow;
    r.lhs = std::move(sum);
    const Point s = arrow.start, e = arrow.end;
    if (s == Point{1, 1} && e == Point{1, 1}) {
      r.kind = Relation::Kind::Differential;
      r.i = r.j = 1;
      r.label = "differential";
    } else if (s.second == 1 && e == Point{1, 1}) {
      r.kind = Relation::Kind::Algebra;
      r.i = s.first;
      r.label = arity_label("ainfty", s.first);
    } else if (s == Point{1, 1} && e.first == 1) {
      r.kind = Relation::Kind::Coalgebra;
      r.i = e.second;
      r.label = arity_label("coainfty", e.second);
    } else if (s.second == 1 && e.first == 1) {
      r.kind = Relation::Kind::Bialgebra;
      r.i = s.first;
      r.j = e.second;
      r.label = "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
      r.diagonal_dependent = std::max(r.i, r.j) >= 4;
    } else {
      r.kind = Relation::Kind::Residual;
      r.label = to_string(arrow);
      out.residual.push_back(std::move(r));
      continue;
    }
    out.relations.push_back(std::move(r));
  }
  out.notes.push_back("expanded with m_i for i <= " + std::to_string(omega.I) + " and Δ_j for j <= " +
                      std::to_string(omega.J) + "; components of larger arity are not included");
  if (!out.residual.empty()) {
    out.notes.push_back(std::to_string(out.residual.size()) +
                        " off-axis components (arrows not from the horizontal to the vertical axis)");
  }
  return out;
}

Relation generate_relation(int i, int j, const Diagonal& diag) {
  if (i < 2 || j < 2) throw InvalidArity("relations (i,j) need i, j >= 2");
  const OperationSet ops = OperationSet::standard(i, j, false);
  Relation r;
  r.kind = Relation::Kind::Bialgebra;
  r.i = i;
  r.j = j;
  r.label = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  r.arrow = Arrow{{i, 1}, {1, j}};
  r.lhs = upsilon(Monomial::single(OpExpr::delta(j)), Monomial::single(OpExpr::m(i)));
  r.rhs_left = xi_power(ops, j, Face::corolla(i), diag);
  r.rhs_right = zeta_power(ops, i, Face::corolla(j), diag);
  r.rhs = upsilon(r.rhs_left, r.rhs_right);
  r.diagonal_dependent = std::max(i, j) >= 4;
  return r;
}

namespace {

// Σ over r + s + t = n of outer_{r+1+t} ∘ (1^r ⊗ inner_s ⊗ 1^t); `flip`
// builds the coalgebra version.
MatrixSum classical_terms(int n, const OperationSet& ops, bool coalgebra) {
  auto op = [&](int k) -> std::optional<OpExpr> {
    if (k == 1) return ops.d;
    const OpExpr* e = coalgebra ? ops.coproduct(k) : ops.product(k);
    return e ? std::optional<OpExpr>(*e) : std::nullopt;
  };
  MatrixSum out;
  for (int s = 1; s <= n; ++s) {
    for (int r = 0; r + s <= n; ++r) {
      const int t = n - r - s;
      const auto outer = op(r + 1 + t);
      const auto inner = op(s);
      if (!outer || !inner) continue;
      std::vector<OpExpr> items;
      if (r) items.push_back(OpExpr::identity(r));
      items.push_back(*inner);
      if (t) items.push_back(OpExpr::identity(t));
      const OpExpr middle = OpExpr::tensor(items);
      out.toggle(Monomial::single(coalgebra ? OpExpr::compose({middle, *outer}) : OpExpr::compose({*outer, middle})));
    }
  }
  return out;
}

}  // namespace

Relation algebra_relation(int n, const OperationSet& ops) {
  if (n < 1) throw InvalidArity("A∞ relations start at n = 1");
  Relation r;
  r.kind = n == 1 ? Relation::Kind::Differential : Relation::Kind::Algebra;
  r.i = n;
  r.j = n == 1 ? 1 : 0;
  r.label = n == 1 ? "differential" : arity_label("ainfty", n);
  r.arrow = Arrow{{n, 1}, {1, 1}};
  r.lhs = classical_terms(n, ops, false);
  return r;
}

Relation coalgebra_relation(int n, const OperationSet& ops) {
  if (n < 1) throw InvalidArity("A∞ relations start at n = 1");
  Relation r;
  r.kind = n == 1 ? Relation::Kind::Differential : Relation::Kind::Coalgebra;
  r.i = n;
  r.j = n == 1 ? 1 : 0;
  r.label = n == 1 ? "differential" : arity_label("coainfty", n);
  r.arrow = Arrow{{1, 1}, {1, n}};
  r.lhs = classical_terms(n, ops, true);
  return r;
}

}  // namespace ainfty
