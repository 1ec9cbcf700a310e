#include <algorithm>
#include <map>
#include <numeric>

#include "ainfty/errors.hpp"
#include "ainfty/opexpr.hpp"

namespace ainfty {

namespace {

struct DiagramNode {
  Generator gen;
  std::vector<int> in;
  std::vector<int> out;
};

// String diagram: generators as nodes, wires as integers.
class Diagram {
 public:
  explicit Diagram(const OpExpr& e) {
    inputs_.resize(static_cast<std::size_t>(e.inputs()));
    std::iota(inputs_.begin(), inputs_.end(), 0);
    wires_ = e.inputs();
    outputs_ = build(e, inputs_);
  }

  const std::vector<DiagramNode>& nodes() const { return nodes_; }
  const std::vector<int>& inputs() const { return inputs_; }
  const std::vector<int>& outputs() const { return outputs_; }

 private:
  std::vector<int> build(const OpExpr& e, const std::vector<int>& in) {
    switch (e.kind()) {
      case OpExpr::Kind::Identity:
        return in;
      case OpExpr::Kind::Permutation: {
        std::vector<int> out(in.size());
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = in[static_cast<std::size_t>(e.source()[k])];
        return out;
      }
      case OpExpr::Kind::Atom: {
        DiagramNode node{e.generator(), in, {}};
        for (int k = 0; k < e.outputs(); ++k) node.out.push_back(wires_++);
        nodes_.push_back(node);
        return node.out;
      }
      case OpExpr::Kind::Tensor: {
        std::vector<int> out;
        std::size_t at = 0;
        for (const auto& p : e.parts()) {
          const auto n = static_cast<std::size_t>(p.inputs());
          auto piece = build(p, std::vector<int>(in.begin() + static_cast<std::ptrdiff_t>(at),
                                                 in.begin() + static_cast<std::ptrdiff_t>(at + n)));
          out.insert(out.end(), piece.begin(), piece.end());
          at += n;
        }
        return out;
      }
      case OpExpr::Kind::Compose: {
        std::vector<int> cur = in;
        for (auto it = e.parts().rbegin(); it != e.parts().rend(); ++it) cur = build(*it, cur);
        return cur;
      }
    }
    return in;
  }

  std::vector<DiagramNode> nodes_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
  int wires_ = 0;
};

std::vector<int> source_between(const std::vector<int>& from, const std::vector<int>& to) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < from.size(); ++i) pos[from[i]] = static_cast<int>(i);
  std::vector<int> source;
  for (int w : to) source.push_back(pos.at(w));
  return source;
}

}  // namespace

OpExpr normalize(const OpExpr& e) {
  const Diagram dia(e);
  const auto& nodes = dia.nodes();
  std::map<int, std::size_t> consumer;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int w : nodes[i].in) consumer[w] = i;

  std::vector<bool> placed(nodes.size(), false);
  std::size_t remaining = nodes.size();
  std::vector<int> wires = dia.inputs();
  std::vector<OpExpr> layers;  // in order of application

  while (remaining > 0) {
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < wires.size(); ++i) pos[wires[i]] = i;
    std::vector<bool> ready(nodes.size(), false), planar(nodes.size(), false);
    bool any_planar = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (placed[i]) continue;
      const auto& in = nodes[i].in;
      ready[i] = std::all_of(in.begin(), in.end(), [&](int w) { return pos.count(w) != 0; });
      if (!ready[i]) continue;
      planar[i] = true;
      for (std::size_t k = 1; k < in.size(); ++k) planar[i] = planar[i] && pos[in[k]] == pos[in[0]] + k;
      any_planar = any_planar || planar[i];
    }

    std::vector<int> next;
    if (any_planar) {
      std::vector<OpExpr> items;
      for (std::size_t i = 0; i < wires.size();) {
        auto c = consumer.find(wires[i]);
        if (c != consumer.end() && planar[c->second] && nodes[c->second].in.front() == wires[i]) {
          const auto& node = nodes[c->second];
          items.push_back(OpExpr::atom(node.gen));
          next.insert(next.end(), node.out.begin(), node.out.end());
          placed[c->second] = true;
          --remaining;
          i += node.in.size();
        } else {
          items.push_back(OpExpr::identity());
          next.push_back(wires[i]);
          ++i;
        }
      }
      layers.push_back(OpExpr::tensor(items));
    } else {
      // gather the inputs of every ready node into a block at its leftmost input
      std::vector<std::pair<std::size_t, std::vector<int>>> blocks;
      for (std::size_t i = 0; i < wires.size(); ++i) {
        auto c = consumer.find(wires[i]);
        if (c != consumer.end() && ready[c->second]) {
          const auto& in = nodes[c->second].in;
          std::size_t first = wires.size();
          for (int w : in) first = std::min(first, pos[w]);
          if (first == i) blocks.emplace_back(i, in);
        } else {
          blocks.emplace_back(i, std::vector<int>{wires[i]});
        }
      }
      for (const auto& b : blocks) next.insert(next.end(), b.second.begin(), b.second.end());
      layers.push_back(OpExpr::permutation(source_between(wires, next)));
    }
    wires = std::move(next);
  }
  if (wires != dia.outputs()) layers.push_back(OpExpr::permutation(source_between(wires, dia.outputs())));
  if (layers.empty()) return OpExpr::identity(e.inputs());
  std::reverse(layers.begin(), layers.end());
  return OpExpr::compose(layers);
}

bool equivalent(const OpExpr& a, const OpExpr& b) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) return false;
  return normalize(a) == normalize(b);
}

}  // namespace ainfty
