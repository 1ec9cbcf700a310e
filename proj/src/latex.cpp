#include "ainfty/latex.hpp"

namespace ainfty {

namespace {

std::string generator_latex(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Differential:
      return "d";
    case Generator::Kind::Product:
      return "m_{" + std::to_string(g.inputs) + "}";
    case Generator::Kind::Coproduct:
      return "\\Delta_{" + std::to_string(g.outputs) + "}";
    case Generator::Kind::Symbol:
      break;
  }
  return g.name + "_{" + std::to_string(g.outputs) + "," + std::to_string(g.inputs) + "}";
}

std::string permutation_latex(const std::vector<int>& source) {
  // σ_{q,p} is recognised through the Unicode rendering
  const std::string text = OpExpr::permutation(source).str();
  const std::string sigma = "σ{";
  if (text.rfind(sigma, 0) == 0) return "\\sigma_{" + text.substr(sigma.size(), text.size() - sigma.size() - 1) + "}";
  std::string out = "\\pi_{";
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(source[i] + 1);
  }
  return out + "}";
}

}  // namespace

std::string to_latex(const OpExpr& e) {
  switch (e.kind()) {
    case OpExpr::Kind::Identity:
      return e.inputs() == 1 ? "1" : "1^{\\otimes " + std::to_string(e.inputs()) + "}";
    case OpExpr::Kind::Permutation:
      return permutation_latex(e.source());
    case OpExpr::Kind::Atom:
      return generator_latex(e.generator());
    case OpExpr::Kind::Tensor: {
      std::string out;
      for (std::size_t i = 0; i < e.parts().size(); ++i) {
        const auto& p = e.parts()[i];
        if (i) out += "\\otimes ";
        out += p.kind() == OpExpr::Kind::Compose ? "\\left(" + to_latex(p) + "\\right)" : to_latex(p);
      }
      return out;
    }
    case OpExpr::Kind::Compose: {
      // composition by juxtaposition, tensors in parentheses
      std::string out;
      for (const auto& p : e.parts()) {
        const bool wrap = p.kind() == OpExpr::Kind::Tensor || (p.is_identity() && p.inputs() > 1);
        out += wrap ? "\\left(" + to_latex(p) + "\\right)" : to_latex(p);
      }
      return out;
    }
  }
  return {};
}

std::string to_latex(const Monomial& m) {
  if (m.rows() == 1 && m.cols() == 1) return to_latex(m.at(0, 0));
  std::string out = "\\left[\\begin{array}{" + std::string(static_cast<std::size_t>(m.cols()), 'c') + "}";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out += "\\\\";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += " & ";
      out += to_latex(m.at(r, c));
    }
  }
  return out + "\\end{array}\\right]";
}

std::string to_latex(const MatrixSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& m : s) {
    if (!out.empty()) out += " + ";
    out += to_latex(m);
  }
  return out;
}

std::string to_latex(const Relation& r) {
  const std::string lhs = to_latex(r.lhs);
  if (!r.rhs_left.empty() && !r.rhs_right.empty()) {
    auto group = [](const MatrixSum& s) {
      const std::string body = to_latex(s);
      return s.size() > 1 ? "\\left\\{" + body + "\\right\\}" : body;
    };
    return lhs + " = " + group(r.rhs_left) + " \\cdot " + group(r.rhs_right);
  }
  return lhs + " = " + to_latex(r.rhs);
}

std::string to_latex(const Face& f) { return "\\mathtt{" + f.code() + "}"; }

std::string to_latex(const TensorFaceChain& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [a, b] : c) {
    if (!out.empty()) out += " + ";
    out += to_latex(a) + "\\otimes " + to_latex(b);
  }
  return out;
}

}  // namespace ainfty
