#pragma once

#include <string>
#include <vector>

#include "ainfty/cochain.hpp"

namespace ainfty {

/// How far the series in Bd₀ and Bd₁ are expanded: rows up to max_in
/// columns and wedge powers up to max_out; columns and Čech powers dually.
struct Truncation {
  int max_in = 2;
  int max_out = 2;
};

/// ω = d + Σ_{i≤I} m_i + Σ_{j≤J} Δ_j.
struct OmegaSpec {
  OperationSet ops;
  int I = 2;
  int J = 2;

  static OmegaSpec standard(int I, int J, bool with_d = true);
  /// Only d and the m_i (an A∞-algebra), or only d and the Δ_j.
  static OmegaSpec algebra(int I);
  static OmegaSpec coalgebra(int J);

  Truncation bounds() const { return {I, J}; }
  /// ω as a sum of 1×1 monomials.
  MatrixSum as_sum() const;
};

struct Relation {
  enum class Kind { Bialgebra, Algebra, Coalgebra, Differential, Residual };

  Kind kind = Kind::Bialgebra;
  std::string label;
  /// (i, j) for bialgebra relations, arity n for the classical ones.
  int i = 0;
  int j = 0;
  Arrow arrow;
  /// The relation reads lhs = rhs; grouped components have rhs = 0.
  MatrixSum lhs;
  MatrixSum rhs;
  /// Factored right side: columns ξ^{∧j}(e^{i-2}) and rows ζ^{∨i}(e^{j-2}).
  MatrixSum rhs_left;
  MatrixSum rhs_right;
  bool diagonal_dependent = false;

  MatrixSum terms() const { return lhs + rhs; }
};

/// Length-zero (co)extension of θ ∈ M₀: [θ] and every q×1 column and 1×p
/// row with θ in one place and identities elsewhere.
MatrixSum bd0(const OpExpr& theta, int p_max, int q_max);

/// Horizontal and vertical arrows generated by the m's and Δ's: the wedge
/// and Čech powers of ξ, ζ on top cells plus φ^c, ψ^a in codimension one.
MatrixSum bd1(const OperationSet& ops, const Truncation& bounds, const Diagonal& diag = default_diagonal());

/// d_ = Bd₀∘ρ₀ + Bd₁∘ρ₁. Components outside M₀ ⊕ M₁ contribute zero.
MatrixSum restricted_biderivative(const MatrixSum& t, const Truncation& bounds,
                                  const Diagonal& diag = default_diagonal());

/// a • b = Υ(d_a ⊗ d_b).
MatrixSum fraction_product(const MatrixSum& a, const MatrixSum& b, const Truncation& bounds,
                           const Diagonal& diag = default_diagonal());

/// d_ω • d_ω grouped by arrow.
struct StructureEquation {
  std::vector<Relation> relations;
  /// Components whose arrows lie off both axes.
  std::vector<Relation> residual;
  std::vector<std::string> notes;

  const Relation* find(Relation::Kind kind, int i, int j = 0) const;
};

StructureEquation structure_equation_terms(const OmegaSpec& omega, const Diagonal& diag = default_diagonal());

/// Δ_j ∘ m_i = ξ^{∧j}(e^{i-2}) · ζ^{∨i}(e^{j-2}).
Relation generate_relation(int i, int j, const Diagonal& diag = default_diagonal());

/// Σ_{r+s+t=n} m_{r+1+t} ∘ (1^r ⊗ m_s ⊗ 1^t) = 0 with m_1 = d, and the
/// coalgebra dual; terms whose operations are absent are dropped.
Relation algebra_relation(int n, const OperationSet& ops);
Relation coalgebra_relation(int n, const OperationSet& ops);

}  // namespace ainfty
