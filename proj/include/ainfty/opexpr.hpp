#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ainfty {

/// A generating operation of End(TH).
struct Generator {
  enum class Kind { Differential, Product, Coproduct, Symbol };

  Kind kind = Kind::Symbol;
  int inputs = 1;
  int outputs = 1;
  /// Only used by symbols, e.g. `θ` in θ{1,2}.
  std::string name;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Symbolic endomorphism of TH: generators d, m_i, Δ_j, named symbols,
/// identities and strand permutations, closed under ⊗ and ∘.
///
/// Immutable; copies share structure. Each node caches its rendering,
/// which for normalised terms is a complete equality key.
class OpExpr {
 public:
  enum class Kind { Identity, Permutation, Atom, Tensor, Compose };

  static OpExpr identity(int strands = 1);
  /// Output k carries input source[k] (0-based).
  static OpExpr permutation(std::vector<int> source);
  /// σ_{q,p}: (H^{⊗q})^{⊗p} → (H^{⊗p})^{⊗q}, a_{kℓ} ↦ position k·p + ℓ.
  static OpExpr sigma(int q, int p);
  static OpExpr atom(Generator g);
  static OpExpr d();
  static OpExpr m(int arity);
  static OpExpr delta(int arity);
  static OpExpr symbol(std::string name, int outputs, int inputs);
  static OpExpr tensor(const std::vector<OpExpr>& items);
  /// Factors listed outermost first: compose({f, g}) = f ∘ g.
  static OpExpr compose(const std::vector<OpExpr>& factors);

  Kind kind() const noexcept;
  int inputs() const noexcept;
  int outputs() const noexcept;

  /// Children of a tensor or composition (outermost first).
  const std::vector<OpExpr>& parts() const noexcept;
  /// Generator of an atom.
  const Generator& generator() const;
  /// Source map of a permutation (identity: 0..n-1).
  const std::vector<int>& source() const noexcept;
  bool is_identity() const noexcept { return kind() == Kind::Identity; }

  /// Unicode rendering, e.g. `m2∘(1⊗m2)`, `σ{2,2}`, `Δ3`.
  const std::string& str() const noexcept;
  std::string ascii() const;

  friend bool operator==(const OpExpr& a, const OpExpr& b) { return a.str() == b.str(); }
  friend auto operator<=>(const OpExpr& a, const OpExpr& b) { return a.str() <=> b.str(); }

  struct Node;

 private:
  explicit OpExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline OpExpr operator*(const OpExpr& outer, const OpExpr& inner) { return OpExpr::compose({outer, inner}); }

/// Number of generator occurrences (identities and permutations excluded).
int generator_count(const OpExpr& e);

/// Canonical representative of the string diagram of `e`: generators are
/// placed level by level, each at the earliest level its inputs allow,
/// with a strand permutation inserted only where no generator can act on
/// adjacent strands. Two terms have equal normal forms iff their string
/// diagrams are isomorphic.
OpExpr normalize(const OpExpr& e);
bool equivalent(const OpExpr& a, const OpExpr& b);

/// Mirror image: m_i ↔ Δ_i, compositions reversed, permutations inverted.
OpExpr dualize(const OpExpr& e);

/// Parse the rendering grammar (Unicode or ASCII aliases):
///   expr   := tensor ('∘' | '.') tensor ...
///   tensor := factor ('⊗' | 'x') factor ...
///   factor := '(' expr ')' | '1' | 'd' | 'm'N | ('Δ'|'D')N
///           | ('σ'|'s') '{' q ',' p '}' | ('π'|'p') '{' i,... '}' (1-based)
///           | name '{' outputs ',' inputs '}'
OpExpr parse_opexpr(std::string_view text);

}  // namespace ainfty
