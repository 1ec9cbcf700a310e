#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ainfty/biderivative.hpp"
#include "ainfty/opexpr.hpp"

namespace ainfty {

using BasisTuple = std::vector<int>;
/// Sparse vector over GF(2) in a tensor power of H.
using TensorVector = std::set<BasisTuple>;

/// Finite-dimensional DG module over GF(2) with structure constants.
/// Absent operations are zero; named symbols evaluate to zero.
class FiniteModel {
 public:
  explicit FiniteModel(int dim);

  /// {schema_version, dim, d: [[out,in]], m: {"2": [[out,in1,in2]]}, delta: {"2": [[out1,out2,in]]}}.
  /// Repeated entries cancel.
  static FiniteModel from_json(const std::string& text);
  static FiniteModel load(const std::string& path);
  std::string to_json() const;

  int dim() const noexcept { return dim_; }

  /// Toggle one structure constant: op(inputs) gains (or loses) `outputs`.
  void toggle_d(int out, int in);
  void toggle_m(int arity, int out, const BasisTuple& in);
  void toggle_delta(int arity, const BasisTuple& out, int in);

  /// Image of a basis element (or basis tuple, for m).
  const TensorVector& d(int in) const;
  const TensorVector& m(int arity, const BasisTuple& in) const;
  const TensorVector& delta(int arity, int in) const;

  std::vector<int> m_arities() const;
  std::vector<int> delta_arities() const;

 private:
  void check_index(int b) const;

  int dim_;
  std::map<int, TensorVector> d_;
  std::map<int, std::map<BasisTuple, TensorVector>> m_;
  std::map<int, std::map<int, TensorVector>> delta_;
};

TensorVector eval_opexpr(const FiniteModel& model, const OpExpr& e, const BasisTuple& input);
TensorVector eval_opexpr(const FiniteModel& model, const OpExpr& e, const TensorVector& input);
/// Sum of the values of the 1×1 terms of a matrix sum.
TensorVector eval_sum(const FiniteModel& model, const MatrixSum& terms, const BasisTuple& input);

struct RelationCheck {
  std::string label;
  bool pass = true;
  /// Every input tuple on which the two sides differ.
  std::vector<BasisTuple> witnesses;
  TensorVector lhs_value;
  TensorVector rhs_value;
};

struct Report {
  std::vector<RelationCheck> checks;
  bool pass() const;
  const RelationCheck* first_failure() const;
};

std::string format_tuple(const BasisTuple& t);
std::string format_vector(const TensorVector& v);

RelationCheck check_relation(const FiniteModel& model, const Relation& r);

/// A∞-algebra relations for n <= I+1, A∞-coalgebra relations for n <= J+1
/// and the (i,j) relations for 2 <= i <= I, 2 <= j <= J.
Report check_all(const FiniteModel& model, int I, int J, const Diagonal& diag = default_diagonal());

}  // namespace ainfty
