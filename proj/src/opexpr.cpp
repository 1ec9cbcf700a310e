#include "ainfty/opexpr.hpp"

#include <algorithm>
#include <numeric>

#include "ainfty/errors.hpp"

namespace ainfty {

struct OpExpr::Node {
  Kind kind = Kind::Identity;
  int inputs = 1;
  int outputs = 1;
  Generator gen;
  std::vector<OpExpr> parts;
  std::vector<int> source;
  std::string text;
};

namespace {

std::string generator_text(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Differential:
      return "d";
    case Generator::Kind::Product:
      return "m" + std::to_string(g.inputs);
    case Generator::Kind::Coproduct:
      return "Δ" + std::to_string(g.outputs);
    case Generator::Kind::Symbol:
      break;
  }
  return g.name + "{" + std::to_string(g.outputs) + "," + std::to_string(g.inputs) + "}";
}

// Recognises σ_{q,p} with q, p >= 2.
bool match_sigma(const std::vector<int>& source, int& q_out, int& p_out) {
  const int n = static_cast<int>(source.size());
  for (int q = 2; q * 2 <= n; ++q) {
    if (n % q) continue;
    const int p = n / q;
    bool ok = true;
    for (int k = 0; k < q && ok; ++k)
      for (int l = 0; l < p && ok; ++l) ok = source[static_cast<std::size_t>(k * p + l)] == l * q + k;
    if (ok) {
      q_out = q;
      p_out = p;
      return true;
    }
  }
  return false;
}

std::string permutation_text(const std::vector<int>& source, const char* sigma, const char* pi) {
  int q = 0, p = 0;
  if (match_sigma(source, q, p)) return std::string(sigma) + "{" + std::to_string(q) + "," + std::to_string(p) + "}";
  std::string out = std::string(pi) + "{";
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(source[i] + 1);
  }
  return out + "}";
}

std::string identity_text(int n, const char* sep) {
  std::string out = "1";
  for (int i = 1; i < n; ++i) out += std::string(sep) + "1";
  return out;
}

bool needs_parens_in_compose(const OpExpr& e) {
  return e.kind() == OpExpr::Kind::Tensor || (e.kind() == OpExpr::Kind::Identity && e.inputs() > 1);
}

struct Style {
  const char* compose;
  const char* tensor;
  const char* sigma;
  const char* pi;
  bool ascii;
};

std::string ascii_name(const std::string& name) {
  static const std::pair<const char*, const char*> greek[] = {
      {"θ", "th"}, {"η", "eta"}, {"α", "alpha"}, {"β", "beta"}, {"γ", "gamma"}, {"φ", "phi"}, {"ψ", "psi"},
      {"ξ", "xi"}, {"ζ", "zeta"}, {"ω", "omega"}, {"μ", "mu"}, {"ν", "nu"}, {"λ", "lambda"}, {"κ", "kappa"}};
  std::string out = name;
  for (const auto& [u, a] : greek) {
    for (auto pos = out.find(u); pos != std::string::npos; pos = out.find(u)) out.replace(pos, std::string(u).size(), a);
  }
  return out;
}

std::string render(const OpExpr& e, const Style& s) {
  switch (e.kind()) {
    case OpExpr::Kind::Identity:
      return identity_text(e.inputs(), s.tensor);
    case OpExpr::Kind::Permutation:
      return permutation_text(e.source(), s.sigma, s.pi);
    case OpExpr::Kind::Atom: {
      if (!s.ascii) return generator_text(e.generator());
      const Generator& g = e.generator();
      if (g.kind == Generator::Kind::Coproduct) return "D" + std::to_string(g.outputs);
      if (g.kind == Generator::Kind::Symbol)
        return ascii_name(g.name) + "{" + std::to_string(g.outputs) + "," + std::to_string(g.inputs) + "}";
      return generator_text(g);
    }
    case OpExpr::Kind::Tensor: {
      std::string out;
      for (std::size_t i = 0; i < e.parts().size(); ++i) {
        const auto& p = e.parts()[i];
        if (i) out += s.tensor;
        out += p.kind() == OpExpr::Kind::Compose ? "(" + render(p, s) + ")" : render(p, s);
      }
      return out;
    }
    case OpExpr::Kind::Compose: {
      std::string out;
      for (std::size_t i = 0; i < e.parts().size(); ++i) {
        const auto& p = e.parts()[i];
        if (i) out += s.compose;
        out += needs_parens_in_compose(p) ? "(" + render(p, s) + ")" : render(p, s);
      }
      return out;
    }
  }
  return {};
}

constexpr Style kUnicode{"∘", "⊗", "σ", "π", false};
constexpr Style kAscii{" . ", " x ", "s", "p", true};

}  // namespace

OpExpr::Kind OpExpr::kind() const noexcept { return node_->kind; }
int OpExpr::inputs() const noexcept { return node_->inputs; }
int OpExpr::outputs() const noexcept { return node_->outputs; }
const std::vector<OpExpr>& OpExpr::parts() const noexcept { return node_->parts; }
const std::vector<int>& OpExpr::source() const noexcept { return node_->source; }
const std::string& OpExpr::str() const noexcept { return node_->text; }
std::string OpExpr::ascii() const { return render(*this, kAscii); }

const Generator& OpExpr::generator() const {
  if (node_->kind != Kind::Atom) throw InvariantViolation("not a generator: " + str());
  return node_->gen;
}

OpExpr OpExpr::identity(int strands) {
  if (strands < 1) throw InvalidArity("identity needs at least one strand");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Identity;
  n->inputs = n->outputs = strands;
  n->source.resize(static_cast<std::size_t>(strands));
  std::iota(n->source.begin(), n->source.end(), 0);
  n->text = identity_text(strands, "⊗");
  return OpExpr(std::move(n));
}

OpExpr OpExpr::permutation(std::vector<int> source) {
  const int size = static_cast<int>(source.size());
  if (size < 1) throw InvalidArity("empty permutation");
  std::vector<int> sorted = source;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < size; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) throw InvariantViolation("not a permutation");
  }
  if (std::is_sorted(source.begin(), source.end())) return identity(size);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Permutation;
  n->inputs = n->outputs = size;
  n->text = permutation_text(source, "σ", "π");
  n->source = std::move(source);
  return OpExpr(std::move(n));
}

OpExpr OpExpr::sigma(int q, int p) {
  if (q < 1 || p < 1) throw InvalidArity("σ_{q,p} needs q, p >= 1");
  std::vector<int> source(static_cast<std::size_t>(q * p));
  for (int k = 0; k < q; ++k)
    for (int l = 0; l < p; ++l) source[static_cast<std::size_t>(k * p + l)] = l * q + k;
  return permutation(std::move(source));
}

OpExpr OpExpr::atom(Generator g) {
  if (g.inputs < 1 || g.outputs < 1) throw InvalidArity("generators need at least one input and one output");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->inputs = g.inputs;
  n->outputs = g.outputs;
  n->text = generator_text(g);
  n->gen = std::move(g);
  return OpExpr(std::move(n));
}

OpExpr OpExpr::d() { return atom({Generator::Kind::Differential, 1, 1, {}}); }

OpExpr OpExpr::m(int arity) {
  if (arity < 2) throw InvalidArity("m_i needs i >= 2");
  return atom({Generator::Kind::Product, arity, 1, {}});
}

OpExpr OpExpr::delta(int arity) {
  if (arity < 2) throw InvalidArity("Δ_j needs j >= 2");
  return atom({Generator::Kind::Coproduct, 1, arity, {}});
}

OpExpr OpExpr::symbol(std::string name, int outputs, int inputs) {
  if (name.empty()) throw InvariantViolation("empty symbol name");
  return atom({Generator::Kind::Symbol, inputs, outputs, std::move(name)});
}

OpExpr OpExpr::tensor(const std::vector<OpExpr>& items) {
  if (items.empty()) throw InvalidArity("empty tensor product");
  std::vector<OpExpr> flat;
  for (const auto& it : items) {
    if (it.kind() == Kind::Tensor)
      flat.insert(flat.end(), it.parts().begin(), it.parts().end());
    else
      flat.push_back(it);
  }
  if (flat.size() == 1) return flat.front();
  int in = 0, out = 0;
  bool all_identity = true;
  for (const auto& it : flat) {
    in += it.inputs();
    out += it.outputs();
    all_identity = all_identity && it.is_identity();
  }
  if (all_identity) return identity(in);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->inputs = in;
  n->outputs = out;
  n->parts = std::move(flat);
  n->text = render(OpExpr(n), kUnicode);
  return OpExpr(std::move(n));
}

OpExpr OpExpr::compose(const std::vector<OpExpr>& factors) {
  if (factors.empty()) throw InvalidArity("empty composition");
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (factors[i].inputs() != factors[i + 1].outputs()) {
      throw BiarityError("cannot compose " + factors[i].str() + " (" + std::to_string(factors[i].inputs()) +
                         " inputs) after " + factors[i + 1].str() + " (" + std::to_string(factors[i + 1].outputs()) +
                         " outputs)");
    }
  }
  std::vector<OpExpr> flat;
  for (const auto& f : factors) {
    if (f.kind() == Kind::Compose)
      flat.insert(flat.end(), f.parts().begin(), f.parts().end());
    else if (!f.is_identity())
      flat.push_back(f);
  }
  if (flat.empty()) return identity(factors.front().outputs());
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compose;
  n->outputs = flat.front().outputs();
  n->inputs = flat.back().inputs();
  n->parts = std::move(flat);
  n->text = render(OpExpr(n), kUnicode);
  return OpExpr(std::move(n));
}

int generator_count(const OpExpr& e) {
  switch (e.kind()) {
    case OpExpr::Kind::Atom:
      return 1;
    case OpExpr::Kind::Tensor:
    case OpExpr::Kind::Compose: {
      int n = 0;
      for (const auto& p : e.parts()) n += generator_count(p);
      return n;
    }
    default:
      return 0;
  }
}

OpExpr dualize(const OpExpr& e) {
  switch (e.kind()) {
    case OpExpr::Kind::Identity:
      return e;
    case OpExpr::Kind::Permutation: {
      std::vector<int> inverse(e.source().size());
      for (std::size_t k = 0; k < e.source().size(); ++k) inverse[static_cast<std::size_t>(e.source()[k])] = static_cast<int>(k);
      return OpExpr::permutation(std::move(inverse));
    }
    case OpExpr::Kind::Atom: {
      Generator g = e.generator();
      std::swap(g.inputs, g.outputs);
      if (g.kind == Generator::Kind::Product)
        g.kind = Generator::Kind::Coproduct;
      else if (g.kind == Generator::Kind::Coproduct)
        g.kind = Generator::Kind::Product;
      else if (g.kind == Generator::Kind::Symbol)
        g.name = (!g.name.empty() && g.name.back() == '*') ? g.name.substr(0, g.name.size() - 1) : g.name + "*";
      return OpExpr::atom(std::move(g));
    }
    case OpExpr::Kind::Tensor: {
      std::vector<OpExpr> items;
      for (const auto& p : e.parts()) items.push_back(dualize(p));
      return OpExpr::tensor(items);
    }
    case OpExpr::Kind::Compose: {
      std::vector<OpExpr> factors;
      for (auto it = e.parts().rbegin(); it != e.parts().rend(); ++it) factors.push_back(dualize(*it));
      return OpExpr::compose(factors);
    }
  }
  return e;
}

}  // namespace ainfty
