#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ainfty/gf2.hpp"

namespace ainfty {

/// Planar rooted tree; a node with no children is a leaf.
class PlanarTree {
 public:
  PlanarTree() = default;
  explicit PlanarTree(std::vector<PlanarTree> children) : children_(std::move(children)) {}

  static PlanarTree leaf() { return PlanarTree{}; }
  static PlanarTree corolla(int leaves);

  bool is_leaf() const noexcept { return children_.empty(); }
  bool is_corolla() const;
  int arity() const noexcept { return static_cast<int>(children_.size()); }
  const std::vector<PlanarTree>& children() const noexcept { return children_; }

  int leaf_count() const;
  int internal_nodes() const;

  /// Canonical text: a leaf is `1`, a corolla with k leaves is `k`, any
  /// other node is the parenthesised list of its children.
  std::string encode() const;

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;

 private:
  std::vector<PlanarTree> children_;
};

/// Face of the associahedron K_n: a planar rooted tree with n >= 2 leaves
/// whose internal nodes all have arity >= 2. Ordered by its encoding.
class Face {
 public:
  explicit Face(PlanarTree tree);

  static Face corolla(int leaves) { return Face(PlanarTree::corolla(leaves)); }
  static Face parse(std::string_view text);

  const PlanarTree& tree() const noexcept { return tree_; }
  const std::string& code() const noexcept { return code_; }
  int leaves() const noexcept { return leaves_; }
  int dim() const noexcept { return dim_; }
  int codim() const noexcept { return leaves_ - 2 - dim_; }
  bool is_top() const noexcept { return codim() == 0; }
  bool is_vertex() const noexcept { return dim_ == 0; }

  friend bool operator==(const Face& a, const Face& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    return a.code_ <=> b.code_;
  }

 private:
  PlanarTree tree_;
  std::string code_;
  int leaves_ = 0;
  int dim_ = 0;
};

using FaceChain = Gf2Sum<Face>;

/// All faces of K_n grouped by dimension; each group sorted by encoding.
std::map<int, std::vector<Face>> enumerate_faces(int n);
std::vector<Face> faces_of(int n);

/// Mod-2 cellular boundary: every way of splitting one node into two.
FaceChain boundary(const Face& f);
FaceChain boundary(const FaceChain& c);

/// The binary trees with all internal nodes on the left (resp. right) spine.
Face left_comb(int leaves);
Face right_comb(int leaves);

/// (1,...,k,...,1): a level holding one corolla among stalks.
using LeafSeq = std::vector<int>;

/// Planar tree with one node per level, stored as its descent sequence
/// (top level first). The last level is always a single corolla.
class LevelTree {
 public:
  explicit LevelTree(std::vector<LeafSeq> descent);

  const std::vector<LeafSeq>& descent() const noexcept { return descent_; }
  int levels() const noexcept { return static_cast<int>(descent_.size()); }
  int leaves() const;

  /// Forget the levels.
  Face face() const;

  /// The tree with its top level pruned (requires levels() >= 2).
  LevelTree pruned() const;

  std::string encode() const;

  friend bool operator==(const LevelTree&, const LevelTree&) = default;
  friend auto operator<=>(const LevelTree&, const LevelTree&) = default;

 private:
  std::vector<LeafSeq> descent_;
};

/// Position (0-based) and arity of the corolla recorded in a leaf sequence.
std::pair<int, int> corolla_of(const LeafSeq& seq);

/// Leftmost-first leveling: repeatedly prune the leftmost node whose
/// children are all leaves.
LevelTree level_rep(const Face& f);
std::vector<LeafSeq> descent_sequence(const LevelTree& t);
/// Every leveling with one node per level.
std::vector<LevelTree> all_levelings(const Face& f);

using LevelTreePair = std::pair<LevelTree, LevelTree>;

/// Leaf coproduct: for k levels, sum over 2 <= i <= k of
/// (n_1..n_{i-1}, |n_i|) ⊗ (n_i..n_k); zero for k = 1.
std::vector<LevelTreePair> leaf_coproduct(const LevelTree& t);

/// Graft: replace the internal nodes of `shape` (in preorder) by the given
/// trees, whose leaf counts must match the node arities.
PlanarTree graft(const PlanarTree& shape, const std::vector<PlanarTree>& substitutes);
/// Arities of the internal nodes of a tree in preorder.
std::vector<int> node_arities(const PlanarTree& t);

}  // namespace ainfty
