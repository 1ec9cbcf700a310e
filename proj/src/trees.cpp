#include "ainfty/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "ainfty/errors.hpp"

namespace ainfty {

// --- PlanarTree -------------------------------------------------------------

PlanarTree PlanarTree::corolla(int leaves) {
  if (leaves < 2) throw InvalidArity("corolla needs at least 2 leaves, got " + std::to_string(leaves));
  return PlanarTree(std::vector<PlanarTree>(static_cast<std::size_t>(leaves)));
}

bool PlanarTree::is_corolla() const {
  return !is_leaf() &&
         std::all_of(children_.begin(), children_.end(), [](const PlanarTree& c) { return c.is_leaf(); });
}

int PlanarTree::leaf_count() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

int PlanarTree::internal_nodes() const {
  if (is_leaf()) return 0;
  int n = 1;
  for (const auto& c : children_) n += c.internal_nodes();
  return n;
}

std::string PlanarTree::encode() const {
  if (is_leaf()) return "1";
  if (is_corolla()) return std::to_string(arity());
  std::string out = "(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) out += ',';
    out += children_[i].encode();
  }
  out += ')';
  return out;
}

namespace {

void check_arities(const PlanarTree& t) {
  if (t.is_leaf()) return;
  if (t.arity() < 2) throw InvalidArity("internal node of arity " + std::to_string(t.arity()));
  for (const auto& c : t.children()) check_arities(c);
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PlanarTree parse() {
    PlanarTree t = tree();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters in tree", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  PlanarTree tree() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of tree", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      std::vector<PlanarTree> children;
      children.push_back(tree());
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(tree());
        skip_ws();
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return PlanarTree(std::move(children));
    }
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) throw ParseError("expected arity or '('", pos_);
    int k = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      k = k * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (k == 0) throw ParseError("arity 0", pos_);
    return k == 1 ? PlanarTree::leaf() : PlanarTree::corolla(k);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

// --- Face -------------------------------------------------------------------

Face::Face(PlanarTree tree) : tree_(std::move(tree)) {
  if (tree_.is_leaf()) throw InvalidArity("a face needs at least 2 leaves");
  check_arities(tree_);
  code_ = tree_.encode();
  leaves_ = tree_.leaf_count();
  dim_ = leaves_ - 1 - tree_.internal_nodes();
}

Face Face::parse(std::string_view text) { return Face(TreeParser(text).parse()); }

// --- enumeration ------------------------------------------------------------

namespace {

const std::vector<PlanarTree>& trees_with_leaves(int n, std::map<int, std::vector<PlanarTree>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<PlanarTree> out;
  if (n == 1) {
    out.push_back(PlanarTree::leaf());
  } else {
    // compositions of n into k >= 2 positive parts, then products of subtrees
    std::vector<int> parts;
    std::function<void(int)> compose = [&](int remaining) {
      if (remaining == 0) {
        if (parts.size() < 2) return;
        std::vector<std::vector<PlanarTree>> choices;
        for (int p : parts) choices.push_back(trees_with_leaves(p, memo));
        std::vector<std::size_t> idx(parts.size(), 0);
        while (true) {
          std::vector<PlanarTree> children;
          for (std::size_t i = 0; i < parts.size(); ++i) children.push_back(choices[i][idx[i]]);
          out.emplace_back(std::move(children));
          std::size_t d = 0;
          while (d < idx.size() && ++idx[d] == choices[d].size()) idx[d++] = 0;
          if (d == idx.size()) break;
        }
        return;
      }
      for (int p = 1; p <= remaining; ++p) {
        if (p == n) continue;  // a single part would be a unary node
        parts.push_back(p);
        compose(remaining - p);
        parts.pop_back();
      }
    };
    compose(n);
  }
  return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::map<int, std::vector<Face>> enumerate_faces(int n) {
  if (n < 2) throw InvalidArity("K_n needs n >= 2, got " + std::to_string(n));
  std::map<int, std::vector<PlanarTree>> memo;
  std::map<int, std::vector<Face>> by_dim;
  for (const auto& t : trees_with_leaves(n, memo)) {
    Face f(t);
    by_dim[f.dim()].push_back(std::move(f));
  }
  for (auto& [dim, faces] : by_dim) std::sort(faces.begin(), faces.end());
  return by_dim;
}

std::vector<Face> faces_of(int n) {
  std::vector<Face> out;
  for (auto& [dim, faces] : enumerate_faces(n)) out.insert(out.end(), faces.begin(), faces.end());
  std::sort(out.begin(), out.end());
  return out;
}

// --- boundary ---------------------------------------------------------------

namespace {

std::vector<PlanarTree> single_splits(const PlanarTree& t) {
  std::vector<PlanarTree> out;
  if (t.is_leaf()) return out;
  const auto& ch = t.children();
  const int k = t.arity();
  for (int start = 0; start < k; ++start) {
    for (int len = 2; len <= k - 1 && start + len <= k; ++len) {
      std::vector<PlanarTree> grouped(ch.begin() + start, ch.begin() + start + len);
      std::vector<PlanarTree> children(ch.begin(), ch.begin() + start);
      children.emplace_back(std::move(grouped));
      children.insert(children.end(), ch.begin() + start + len, ch.end());
      out.emplace_back(std::move(children));
    }
  }
  for (int i = 0; i < k; ++i) {
    for (auto& variant : single_splits(ch[static_cast<std::size_t>(i)])) {
      std::vector<PlanarTree> children = ch;
      children[static_cast<std::size_t>(i)] = std::move(variant);
      out.emplace_back(std::move(children));
    }
  }
  return out;
}

}  // namespace

FaceChain boundary(const Face& f) {
  FaceChain out;
  for (auto& t : single_splits(f.tree())) out.toggle(Face(std::move(t)));
  return out;
}

FaceChain boundary(const FaceChain& c) {
  FaceChain out;
  for (const auto& f : c) out += boundary(f);
  return out;
}

Face left_comb(int leaves) {
  PlanarTree t = PlanarTree::corolla(2);
  for (int n = 3; n <= leaves; ++n) t = PlanarTree({t, PlanarTree::leaf()});
  if (leaves < 2) throw InvalidArity("comb needs at least 2 leaves");
  return Face(std::move(t));
}

Face right_comb(int leaves) {
  PlanarTree t = PlanarTree::corolla(2);
  for (int n = 3; n <= leaves; ++n) t = PlanarTree({PlanarTree::leaf(), t});
  if (leaves < 2) throw InvalidArity("comb needs at least 2 leaves");
  return Face(std::move(t));
}

// --- leveled trees ----------------------------------------------------------

std::pair<int, int> corolla_of(const LeafSeq& seq) {
  int pos = -1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1) throw InvariantViolation("leaf sequence entry < 1");
    if (seq[i] >= 2) {
      if (pos >= 0) throw InvariantViolation("leaf sequence with two corollas");
      pos = static_cast<int>(i);
    }
  }
  if (pos < 0) throw InvariantViolation("leaf sequence without a corolla");
  return {pos, seq[static_cast<std::size_t>(pos)]};
}

LevelTree::LevelTree(std::vector<LeafSeq> descent) : descent_(std::move(descent)) {
  if (descent_.empty()) throw InvariantViolation("empty descent sequence");
  for (const auto& seq : descent_) {
    if (seq.empty()) throw InvariantViolation("empty leaf sequence");
    corolla_of(seq);
  }
  if (descent_.back().size() != 1) throw InvariantViolation("bottom level must be a single corolla");
  for (std::size_t j = 0; j + 1 < descent_.size(); ++j) {
    const int below = std::accumulate(descent_[j + 1].begin(), descent_[j + 1].end(), 0);
    if (below != static_cast<int>(descent_[j].size())) {
      throw InvariantViolation("level " + std::to_string(j + 2) + " does not prune level " + std::to_string(j + 1));
    }
  }
}

int LevelTree::leaves() const { return std::accumulate(descent_.front().begin(), descent_.front().end(), 0); }

namespace {

PlanarTree replace_leaf(const PlanarTree& t, int& index, const PlanarTree& sub) {
  if (t.is_leaf()) {
    return index-- == 0 ? sub : t;
  }
  std::vector<PlanarTree> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(replace_leaf(c, index, sub));
  return PlanarTree(std::move(children));
}

// Prunes the first (preorder) node all of whose children are leaves,
// selected by `which` among such nodes; reports its leaf offset and arity.
PlanarTree prune_node(const PlanarTree& t, int& which, int& offset, int& arity, bool& done) {
  if (t.is_leaf()) {
    if (!done) ++offset;
    return t;
  }
  if (!done && t.is_corolla()) {
    if (which == 0) {
      done = true;
      arity = t.arity();
      return PlanarTree::leaf();
    }
    --which;
  }
  std::vector<PlanarTree> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(prune_node(c, which, offset, arity, done));
  return PlanarTree(std::move(children));
}

int count_prunable(const PlanarTree& t) {
  if (t.is_leaf()) return 0;
  if (t.is_corolla()) return 1;
  int n = 0;
  for (const auto& c : t.children()) n += count_prunable(c);
  return n;
}

void levelings(const PlanarTree& t, std::vector<LeafSeq>& prefix, std::vector<LevelTree>& out) {
  if (t.is_corolla()) {
    prefix.push_back({t.arity()});
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  const int leaves = t.leaf_count();
  const int choices = count_prunable(t);
  for (int c = 0; c < choices; ++c) {
    int which = c, offset = 0, arity = 0;
    bool done = false;
    PlanarTree rest = prune_node(t, which, offset, arity, done);
    LeafSeq seq(static_cast<std::size_t>(leaves - arity + 1), 1);
    seq[static_cast<std::size_t>(offset)] = arity;
    prefix.push_back(std::move(seq));
    levelings(rest, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Face LevelTree::face() const {
  PlanarTree t = PlanarTree::corolla(descent_.back().front());
  for (auto j = descent_.size() - 1; j-- > 0;) {
    auto [pos, arity] = corolla_of(descent_[j]);
    int index = pos;
    t = replace_leaf(t, index, PlanarTree::corolla(arity));
  }
  return Face(std::move(t));
}

LevelTree LevelTree::pruned() const {
  if (levels() < 2) throw InvariantViolation("cannot prune a single-level tree");
  return LevelTree(std::vector<LeafSeq>(descent_.begin() + 1, descent_.end()));
}

std::string LevelTree::encode() const {
  std::string out = "(";
  for (std::size_t j = 0; j < descent_.size(); ++j) {
    if (j) out += ',';
    out += '(';
    for (std::size_t i = 0; i < descent_[j].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(descent_[j][i]);
    }
    out += ')';
  }
  return out + ")";
}

LevelTree level_rep(const Face& f) {
  std::vector<LeafSeq> descent;
  PlanarTree t = f.tree();
  while (!t.is_corolla()) {
    const int leaves = t.leaf_count();
    int which = 0, offset = 0, arity = 0;
    bool done = false;
    t = prune_node(t, which, offset, arity, done);
    LeafSeq seq(static_cast<std::size_t>(leaves - arity + 1), 1);
    seq[static_cast<std::size_t>(offset)] = arity;
    descent.push_back(std::move(seq));
  }
  descent.push_back({t.arity()});
  return LevelTree(std::move(descent));
}

std::vector<LeafSeq> descent_sequence(const LevelTree& t) { return t.descent(); }

std::vector<LevelTree> all_levelings(const Face& f) {
  std::vector<LevelTree> out;
  std::vector<LeafSeq> prefix;
  levelings(f.tree(), prefix, out);
  return out;
}

std::vector<LevelTreePair> leaf_coproduct(const LevelTree& t) {
  std::vector<LevelTreePair> out;
  const auto& n = t.descent();
  for (std::size_t i = 1; i < n.size(); ++i) {
    std::vector<LeafSeq> first(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(i));
    first.push_back({std::accumulate(n[i].begin(), n[i].end(), 0)});
    std::vector<LeafSeq> second(n.begin() + static_cast<std::ptrdiff_t>(i), n.end());
    out.emplace_back(LevelTree(std::move(first)), LevelTree(std::move(second)));
  }
  return out;
}

// --- grafting ---------------------------------------------------------------

namespace {

void collect_arities(const PlanarTree& t, std::vector<int>& out) {
  if (t.is_leaf()) return;
  out.push_back(t.arity());
  for (const auto& c : t.children()) collect_arities(c, out);
}

PlanarTree substitute_leaves(const PlanarTree& t, const std::vector<PlanarTree>& subs, std::size_t& next) {
  if (t.is_leaf()) return subs[next++];
  std::vector<PlanarTree> children;
  for (const auto& c : t.children()) children.push_back(substitute_leaves(c, subs, next));
  return PlanarTree(std::move(children));
}

PlanarTree graft_at(const PlanarTree& shape, const std::vector<PlanarTree>& subs, std::size_t& index) {
  if (shape.is_leaf()) return shape;
  const PlanarTree& own = subs.at(index++);
  if (own.leaf_count() != shape.arity()) throw InvalidArity("graft: substitute has wrong leaf count");
  std::vector<PlanarTree> grafted;
  for (const auto& c : shape.children()) grafted.push_back(graft_at(c, subs, index));
  std::size_t next = 0;
  return substitute_leaves(own, grafted, next);
}

}  // namespace

std::vector<int> node_arities(const PlanarTree& t) {
  std::vector<int> out;
  collect_arities(t, out);
  return out;
}

PlanarTree graft(const PlanarTree& shape, const std::vector<PlanarTree>& substitutes) {
  std::size_t index = 0;
  PlanarTree out = graft_at(shape, substitutes, index);
  if (index != substitutes.size()) throw InvalidArity("graft: too many substitutes");
  return out;
}

}  // namespace ainfty
