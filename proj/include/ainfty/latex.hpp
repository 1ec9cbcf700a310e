#pragma once

#include <string>

#include "ainfty/biderivative.hpp"
#include "ainfty/diagonal.hpp"

namespace ainfty {

/// Typeset notation: m_{2}(1\otimes m_{2}), \Delta_{2}, \sigma_{2,2}.
std::string to_latex(const OpExpr& e);
/// Matrices as \left[\begin{array}…\end{array}\right].
std::string to_latex(const Monomial& m);
std::string to_latex(const MatrixSum& s);
/// lhs = (Σ columns) \cdot (Σ rows) when the factored form is known.
std::string to_latex(const Relation& r);
std::string to_latex(const Face& f);
std::string to_latex(const TensorFaceChain& c);

}  // namespace ainfty
