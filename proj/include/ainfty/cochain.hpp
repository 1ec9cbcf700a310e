#pragma once

#include <functional>
#include <map>
#include <optional>

#include "ainfty/diagonal.hpp"
#include "ainfty/matrix.hpp"
#include "ainfty/trees.hpp"

namespace ainfty {

/// The operations d, m_i, Δ_j carried by ω. Any arity may be absent, in
/// which case every term needing it vanishes.
struct OperationSet {
  std::optional<OpExpr> d;
  std::map<int, OpExpr> m;
  std::map<int, OpExpr> delta;

  /// d (optional), m_2..m_I and Δ_2..Δ_J as the standard generators.
  static OperationSet standard(int max_m, int max_delta, bool with_d = true);

  const OpExpr* product(int arity) const;
  const OpExpr* coproduct(int arity) const;
  int max_m() const { return m.empty() ? 1 : m.rbegin()->first; }
  int max_delta() const { return delta.empty() ? 1 : delta.rbegin()->first; }
};

/// A cochain on K with values in the essential submodule; evaluated on
/// leveled trees, and on faces through their leftmost-first leveling.
class Cochain {
 public:
  using Fn = std::function<MatrixSum(const LevelTree&)>;

  explicit Cochain(Fn fn) : fn_(std::move(fn)) {}

  MatrixSum operator()(const LevelTree& t) const { return fn_(t); }
  MatrixSum operator()(const Face& f) const { return fn_(level_rep(f)); }

 private:
  Fn fn_;
};

/// φ(e^{i-2}) = m_i, zero off the top cells; ψ dually.
Cochain phi(const OperationSet& ops);
Cochain psi(const OperationSet& ops);

/// φ^c: m_n on the top cell and the row [1 … m_k … 1] on the 2-level
/// tree whose top leaf sequence is x_i(k); zero in codimension >= 2.
Cochain coderivation_cochain(const OperationSet& ops);
/// ψ^a: the dual columns [1; …; Δ_k; …; 1].
Cochain derivation_cochain(const OperationSet& ops);

/// (f ∧ℓ g)(T) = Σ f(B) · g(A) over the leaf coproduct terms A ⊗ B.
Cochain cup_leaf_wedge(const Cochain& f, const Cochain& g);
/// (f ∨ℓ g)(T) = Σ f(A) · g(B).
Cochain cup_leaf_cech(const Cochain& f, const Cochain& g);

/// Left-parenthesised k-th leaf-cup power (k >= 1).
Cochain leaf_power_wedge(const Cochain& f, int k);
Cochain leaf_power_cech(const Cochain& f, int k);

/// ξ and ζ facewise: the single surviving power (φ^c)^{∧ℓ L}, with L the
/// number of levels. ξ(face) is the composite of m's along the tree.
MatrixSum xi(const OperationSet& ops, const Face& f);
MatrixSum zeta(const OperationSet& ops, const Face& f);
Cochain xi(const OperationSet& ops);
Cochain zeta(const OperationSet& ops);

/// ξ^{∧k}(f): one stacked column [ξ(a_1); …; ξ(a_k)] per term of the
/// k-fold diagonal of f. ζ^{∨k}(f): concatenated rows.
MatrixSum xi_power(const OperationSet& ops, int k, const Face& f, const Diagonal& diag = default_diagonal());
MatrixSum zeta_power(const OperationSet& ops, int k, const Face& f, const Diagonal& diag = default_diagonal());

}  // namespace ainfty
