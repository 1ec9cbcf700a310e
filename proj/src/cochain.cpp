#include "ainfty/cochain.hpp"

#include "ainfty/errors.hpp"

namespace ainfty {

OperationSet OperationSet::standard(int max_m, int max_delta, bool with_d) {
  OperationSet ops;
  if (with_d) ops.d = OpExpr::d();
  for (int i = 2; i <= max_m; ++i) ops.m.emplace(i, OpExpr::m(i));
  for (int j = 2; j <= max_delta; ++j) ops.delta.emplace(j, OpExpr::delta(j));
  return ops;
}

const OpExpr* OperationSet::product(int arity) const {
  auto it = m.find(arity);
  return it == m.end() ? nullptr : &it->second;
}

const OpExpr* OperationSet::coproduct(int arity) const {
  auto it = delta.find(arity);
  return it == delta.end() ? nullptr : &it->second;
}

namespace {

// The strands of the top level: identities except the corolla.
std::vector<OpExpr> level_entries(const LeafSeq& seq, const OpExpr& op) {
  std::vector<OpExpr> out;
  for (int n : seq) out.push_back(n == 1 ? OpExpr::identity() : op);
  return out;
}

}  // namespace

Cochain phi(const OperationSet& ops) {
  return Cochain([ops](const LevelTree& t) -> MatrixSum {
    if (t.levels() != 1) return {};
    const OpExpr* m = ops.product(t.leaves());
    return m ? MatrixSum{Monomial::single(*m)} : MatrixSum{};
  });
}

Cochain psi(const OperationSet& ops) {
  return Cochain([ops](const LevelTree& t) -> MatrixSum {
    if (t.levels() != 1) return {};
    const OpExpr* delta = ops.coproduct(t.leaves());
    return delta ? MatrixSum{Monomial::single(*delta)} : MatrixSum{};
  });
}

Cochain coderivation_cochain(const OperationSet& ops) {
  return Cochain([ops](const LevelTree& t) -> MatrixSum {
    if (t.levels() == 1) return phi(ops)(t);
    if (t.levels() != 2) return {};
    const LeafSeq& top = t.descent().front();
    const OpExpr* m = ops.product(corolla_of(top).second);
    if (!m) return {};
    return {Monomial::row(level_entries(top, *m))};
  });
}

Cochain derivation_cochain(const OperationSet& ops) {
  return Cochain([ops](const LevelTree& t) -> MatrixSum {
    if (t.levels() == 1) return psi(ops)(t);
    if (t.levels() != 2) return {};
    const LeafSeq& top = t.descent().front();
    const OpExpr* delta = ops.coproduct(corolla_of(top).second);
    if (!delta) return {};
    return {Monomial::column(level_entries(top, *delta))};
  });
}

Cochain cup_leaf_wedge(const Cochain& f, const Cochain& g) {
  return Cochain([f, g](const LevelTree& t) {
    MatrixSum out;
    for (const auto& [a, b] : leaf_coproduct(t)) {
      const MatrixSum ga = g(a);
      if (ga.empty()) continue;
      out += upsilon(f(b), ga);
    }
    return out;
  });
}

Cochain cup_leaf_cech(const Cochain& f, const Cochain& g) {
  return Cochain([f, g](const LevelTree& t) {
    MatrixSum out;
    for (const auto& [a, b] : leaf_coproduct(t)) {
      const MatrixSum fa = f(a);
      if (fa.empty()) continue;
      out += upsilon(fa, g(b));
    }
    return out;
  });
}

Cochain leaf_power_wedge(const Cochain& f, int k) {
  if (k < 1) throw InvalidArity("leaf-cup powers start at 1");
  Cochain out = f;
  for (int i = 2; i <= k; ++i) out = cup_leaf_wedge(out, f);
  return out;
}

Cochain leaf_power_cech(const Cochain& f, int k) {
  if (k < 1) throw InvalidArity("leaf-cup powers start at 1");
  Cochain out = f;
  for (int i = 2; i <= k; ++i) out = cup_leaf_cech(out, f);
  return out;
}

Cochain xi(const OperationSet& ops) {
  const Cochain base = coderivation_cochain(ops);
  return Cochain([base](const LevelTree& t) { return leaf_power_wedge(base, t.levels())(t); });
}

Cochain zeta(const OperationSet& ops) {
  const Cochain base = derivation_cochain(ops);
  return Cochain([base](const LevelTree& t) { return leaf_power_cech(base, t.levels())(t); });
}

MatrixSum xi(const OperationSet& ops, const Face& f) { return xi(ops)(f); }
MatrixSum zeta(const OperationSet& ops, const Face& f) { return zeta(ops)(f); }

namespace {

template <typename Cross>
MatrixSum power(const Cochain& c, int k, const Face& f, const Diagonal& diag, Cross cross) {
  std::map<Face, MatrixSum> cache;
  auto value = [&](const Face& a) -> const MatrixSum& {
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, c(a)).first;
    return it->second;
  };
  MatrixSum out;
  for (const auto& term : diag.iterate(f, k)) {
    MatrixSum acc = value(term.front());
    for (std::size_t r = 1; r < term.size() && !acc.empty(); ++r) acc = cross(acc, value(term[r]));
    out += acc;
  }
  return out;
}

}  // namespace

MatrixSum xi_power(const OperationSet& ops, int k, const Face& f, const Diagonal& diag) {
  return power(xi(ops), k, f, diag, [](const MatrixSum& a, const MatrixSum& b) { return wedge_cross(a, b); });
}

MatrixSum zeta_power(const OperationSet& ops, int k, const Face& f, const Diagonal& diag) {
  return power(zeta(ops), k, f, diag, [](const MatrixSum& a, const MatrixSum& b) { return cech_cross(a, b); });
}

}  // namespace ainfty
