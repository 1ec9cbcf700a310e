#include "ainfty/evaluator.hpp"

#include <fstream>
#include <sstream>

#include "ainfty/errors.hpp"
#include "json.hpp"

namespace ainfty {

namespace {

const TensorVector kZero;
constexpr int kSchemaVersion = 1;

void toggle(TensorVector& v, const BasisTuple& t) {
  auto [it, inserted] = v.insert(t);
  if (!inserted) v.erase(it);
}

}  // namespace

FiniteModel::FiniteModel(int dim) : dim_(dim) {
  if (dim < 1) throw ModelError("model dimension must be at least 1");
}

void FiniteModel::check_index(int b) const {
  if (b < 0 || b >= dim_) throw ModelError("basis index " + std::to_string(b) + " out of range 0.." + std::to_string(dim_ - 1));
}

void FiniteModel::toggle_d(int out, int in) {
  check_index(out);
  check_index(in);
  toggle(d_[in], {out});
}

void FiniteModel::toggle_m(int arity, int out, const BasisTuple& in) {
  if (arity < 2 || static_cast<int>(in.size()) != arity) throw ModelError("m_" + std::to_string(arity) + " entry has the wrong length");
  check_index(out);
  for (int b : in) check_index(b);
  toggle(m_[arity][in], {out});
}

void FiniteModel::toggle_delta(int arity, const BasisTuple& out, int in) {
  if (arity < 2 || static_cast<int>(out.size()) != arity) throw ModelError("Δ_" + std::to_string(arity) + " entry has the wrong length");
  check_index(in);
  for (int b : out) check_index(b);
  toggle(delta_[arity][in], out);
}

const TensorVector& FiniteModel::d(int in) const {
  auto it = d_.find(in);
  return it == d_.end() ? kZero : it->second;
}

const TensorVector& FiniteModel::m(int arity, const BasisTuple& in) const {
  auto a = m_.find(arity);
  if (a == m_.end()) return kZero;
  auto it = a->second.find(in);
  return it == a->second.end() ? kZero : it->second;
}

const TensorVector& FiniteModel::delta(int arity, int in) const {
  auto a = delta_.find(arity);
  if (a == delta_.end()) return kZero;
  auto it = a->second.find(in);
  return it == a->second.end() ? kZero : it->second;
}

std::vector<int> FiniteModel::m_arities() const {
  std::vector<int> out;
  for (const auto& [k, v] : m_) out.push_back(k);
  return out;
}

std::vector<int> FiniteModel::delta_arities() const {
  std::vector<int> out;
  for (const auto& [k, v] : delta_) out.push_back(k);
  return out;
}

FiniteModel FiniteModel::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed model JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ModelError("model must be a JSON object");
    if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion) {
      throw ModelError("unsupported model schema_version " + j.at("schema_version").dump());
    }
    FiniteModel model(j.at("dim").get<int>());
    if (j.contains("d")) {
      for (const auto& e : j.at("d")) {
        const auto v = e.get<std::vector<int>>();
        if (v.size() != 2) throw ModelError("d entries are [out, in]");
        model.toggle_d(v[0], v[1]);
      }
    }
    if (j.contains("m")) {
      for (const auto& [key, entries] : j.at("m").items()) {
        const int arity = std::stoi(key);
        for (const auto& e : entries) {
          const auto v = e.get<std::vector<int>>();
          if (static_cast<int>(v.size()) != arity + 1) throw ModelError("m_" + key + " entries are [out, in_1, ..., in_k]");
          model.toggle_m(arity, v[0], BasisTuple(v.begin() + 1, v.end()));
        }
      }
    }
    if (j.contains("delta")) {
      for (const auto& [key, entries] : j.at("delta").items()) {
        const int arity = std::stoi(key);
        for (const auto& e : entries) {
          const auto v = e.get<std::vector<int>>();
          if (static_cast<int>(v.size()) != arity + 1) throw ModelError("delta_" + key + " entries are [out_1, ..., out_k, in]");
          model.toggle_delta(arity, BasisTuple(v.begin(), v.end() - 1), v.back());
        }
      }
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("invalid model: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ModelError("operation arities must be integer keys");
  }
}

FiniteModel FiniteModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string FiniteModel::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = dim_;
  j["d"] = nlohmann::json::array();
  for (const auto& [in, outs] : d_)
    for (const auto& o : outs) j["d"].push_back({o[0], in});
  j["m"] = nlohmann::json::object();
  for (const auto& [arity, table] : m_) {
    auto& list = j["m"][std::to_string(arity)] = nlohmann::json::array();
    for (const auto& [in, outs] : table) {
      for (const auto& o : outs) {
        std::vector<int> row{o[0]};
        row.insert(row.end(), in.begin(), in.end());
        list.push_back(row);
      }
    }
  }
  j["delta"] = nlohmann::json::object();
  for (const auto& [arity, table] : delta_) {
    auto& list = j["delta"][std::to_string(arity)] = nlohmann::json::array();
    for (const auto& [in, outs] : table) {
      for (const auto& o : outs) {
        std::vector<int> row = o;
        row.push_back(in);
        list.push_back(row);
      }
    }
  }
  return j.dump();
}

namespace {

TensorVector eval_atom(const FiniteModel& model, const Generator& g, const BasisTuple& in) {
  switch (g.kind) {
    case Generator::Kind::Differential:
      return model.d(in[0]);
    case Generator::Kind::Product:
      return model.m(g.inputs, in);
    case Generator::Kind::Coproduct:
      return model.delta(g.outputs, in[0]);
    case Generator::Kind::Symbol:
      break;
  }
  return {};
}

TensorVector eval_basis(const FiniteModel& model, const OpExpr& e, const BasisTuple& in);

TensorVector eval_vector(const FiniteModel& model, const OpExpr& e, const TensorVector& in) {
  TensorVector out;
  for (const auto& t : in)
    for (const auto& r : eval_basis(model, e, t)) toggle(out, r);
  return out;
}

TensorVector eval_basis(const FiniteModel& model, const OpExpr& e, const BasisTuple& in) {
  switch (e.kind()) {
    case OpExpr::Kind::Identity:
      return {in};
    case OpExpr::Kind::Permutation: {
      BasisTuple out(in.size());
      for (std::size_t k = 0; k < in.size(); ++k) out[k] = in[static_cast<std::size_t>(e.source()[k])];
      return {out};
    }
    case OpExpr::Kind::Atom:
      return eval_atom(model, e.generator(), in);
    case OpExpr::Kind::Tensor: {
      TensorVector acc{BasisTuple{}};
      std::size_t at = 0;
      for (const auto& p : e.parts()) {
        const auto n = static_cast<std::size_t>(p.inputs());
        const BasisTuple chunk(in.begin() + static_cast<std::ptrdiff_t>(at), in.begin() + static_cast<std::ptrdiff_t>(at + n));
        at += n;
        const TensorVector piece = eval_basis(model, p, chunk);
        TensorVector next;
        for (const auto& a : acc) {
          for (const auto& b : piece) {
            BasisTuple t = a;
            t.insert(t.end(), b.begin(), b.end());
            toggle(next, t);
          }
        }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      return acc;
    }
    case OpExpr::Kind::Compose: {
      TensorVector cur{in};
      for (auto it = e.parts().rbegin(); it != e.parts().rend() && !cur.empty(); ++it) cur = eval_vector(model, *it, cur);
      return cur;
    }
  }
  return {};
}

std::vector<BasisTuple> all_tuples(int dim, int length) {
  std::vector<BasisTuple> out;
  BasisTuple t(static_cast<std::size_t>(length), 0);
  while (true) {
    out.push_back(t);
    int k = length - 1;
    while (k >= 0 && ++t[static_cast<std::size_t>(k)] == dim) t[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace

TensorVector eval_opexpr(const FiniteModel& model, const OpExpr& e, const BasisTuple& input) {
  if (static_cast<int>(input.size()) != e.inputs()) {
    throw EvaluationError(e.str() + " takes " + std::to_string(e.inputs()) + " inputs, got " + std::to_string(input.size()));
  }
  for (int b : input) {
    if (b < 0 || b >= model.dim()) throw EvaluationError("basis index " + std::to_string(b) + " out of range");
  }
  return eval_basis(model, e, input);
}

TensorVector eval_opexpr(const FiniteModel& model, const OpExpr& e, const TensorVector& input) {
  TensorVector out;
  for (const auto& t : input)
    for (const auto& r : eval_opexpr(model, e, t)) toggle(out, r);
  return out;
}

TensorVector eval_sum(const FiniteModel& model, const MatrixSum& terms, const BasisTuple& input) {
  TensorVector out;
  for (const auto& mono : terms) {
    if (mono.rows() != 1 || mono.cols() != 1) throw EvaluationError("only 1×1 terms can be evaluated, got " + mono.str());
    for (const auto& r : eval_opexpr(model, mono.at(0, 0), input)) toggle(out, r);
  }
  return out;
}

std::string format_tuple(const BasisTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

std::string format_vector(const TensorVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& t : v) {
    if (!out.empty()) out += " + ";
    out += format_tuple(t);
  }
  return out;
}

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const RelationCheck* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

RelationCheck check_relation(const FiniteModel& model, const Relation& r) {
  RelationCheck out;
  out.label = r.label;
  for (const auto& input : all_tuples(model.dim(), r.arrow.start.first)) {
    TensorVector lhs = eval_sum(model, r.lhs, input);
    TensorVector rhs = eval_sum(model, r.rhs, input);
    if (lhs == rhs) continue;
    if (out.pass) {
      out.lhs_value = std::move(lhs);
      out.rhs_value = std::move(rhs);
    }
    out.pass = false;
    out.witnesses.push_back(input);
  }
  return out;
}

Report check_all(const FiniteModel& model, int I, int J, const Diagonal& diag) {
  if (I < 2 || J < 2) throw InvalidArity("check_all needs I, J >= 2");
  const OperationSet ops = OperationSet::standard(I, J);
  Report report;
  for (int n = 1; n <= I + 1; ++n) report.checks.push_back(check_relation(model, algebra_relation(n, ops)));
  for (int n = 2; n <= J + 1; ++n) report.checks.push_back(check_relation(model, coalgebra_relation(n, ops)));
  for (int i = 2; i <= I; ++i)
    for (int j = 2; j <= J; ++j) report.checks.push_back(check_relation(model, generate_relation(i, j, diag)));
  return report;
}

}  // namespace ainfty
