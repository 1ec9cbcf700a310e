#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/gf2.hpp"
#include "ainfty/opexpr.hpp"

namespace ainfty {

/// Lattice point (first, second) in ℕ².
struct Point {
  int first = 0;
  int second = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Arrow {
  Point start;
  Point end;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

std::string to_string(const Point& p);
std::string to_string(const Arrow& a);

/// q×p matrix of operations in the essential submodule: entry (k, ℓ) has
/// x[ℓ] inputs and y[k] outputs. Entries are stored in normal form.
class Monomial {
 public:
  explicit Monomial(std::vector<std::vector<OpExpr>> rows);
  /// As above, for entries already in normal form.
  static Monomial from_normal(std::vector<std::vector<OpExpr>> rows);

  static Monomial single(const OpExpr& e) { return Monomial({{e}}); }
  static Monomial column(const std::vector<OpExpr>& entries);
  static Monomial row(const std::vector<OpExpr>& entries);

  int rows() const noexcept { return static_cast<int>(y_.size()); }
  int cols() const noexcept { return static_cast<int>(x_.size()); }
  const OpExpr& at(int r, int c) const { return entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const std::vector<std::vector<OpExpr>>& entries() const noexcept { return entries_; }
  /// Input arity of each column.
  const std::vector<int>& x() const noexcept { return x_; }
  /// Output arity of each row.
  const std::vector<int>& y() const noexcept { return y_; }
  int total_inputs() const;
  int total_outputs() const;

  /// (|x|, q) → (p, |y|).
  Arrow arrow() const;

  /// `[a b; c d]` with Unicode entries.
  const std::string& str() const noexcept { return key_; }
  std::string ascii() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.key_ == b.key_; }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.key_ <=> b.key_; }

 private:
  Monomial(std::vector<std::vector<OpExpr>> rows, bool normalized);

  std::vector<std::vector<OpExpr>> entries_;
  std::vector<int> x_;
  std::vector<int> y_;
  std::string key_;
};

using MatrixSum = Gf2Sum<Monomial>;

inline Arrow arrow_of(const Monomial& a) { return a.arrow(); }

/// s = t = 1 and the inner arities agree.
bool is_tp(const Monomial& a, const Monomial& b);

/// Block sizes of a BTP: A's rows are cut by u, B's columns by v.
struct BlockDecomp {
  std::vector<int> u;
  std::vector<int> v;
  friend bool operator==(const BlockDecomp&, const BlockDecomp&) = default;
};

/// The decomposition making A ⊗ B a BTP, if there is one.
std::optional<BlockDecomp> btp_decompose(const Monomial& a, const Monomial& b);

/// (θ_1 ⊗ … ⊗ θ_q) ∘ σ_{q,p} ∘ (η_1 ⊗ … ⊗ η_p), normalised.
OpExpr gamma(const std::vector<OpExpr>& thetas, const std::vector<OpExpr>& etas);

/// A · B; zero unless A ⊗ B is a BTP. B acts first.
MatrixSum upsilon(const Monomial& a, const Monomial& b);
MatrixSum upsilon(const MatrixSum& a, const MatrixSum& b);

/// Vertical stack when the inputs agree, otherwise zero.
MatrixSum wedge_cross(const Monomial& a, const Monomial& b);
MatrixSum wedge_cross(const MatrixSum& a, const MatrixSum& b);
/// Horizontal concatenation when the outputs agree, otherwise zero.
MatrixSum cech_cross(const Monomial& a, const Monomial& b);
MatrixSum cech_cross(const MatrixSum& a, const MatrixSum& b);

std::vector<std::string> render_terms(const MatrixSum& s, bool ascii = false);

}  // namespace ainfty
