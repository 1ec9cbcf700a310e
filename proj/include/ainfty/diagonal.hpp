#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "ainfty/gf2.hpp"
#include "ainfty/trees.hpp"

namespace ainfty {

using FacePair = std::pair<Face, Face>;
using TensorFaceChain = Gf2Sum<FacePair>;
/// k-fold tensors of faces, all faces of the same K_n.
using FaceTensor = std::vector<Face>;
using IteratedChain = Gf2Sum<FaceTensor>;

/// ∂ ⊗ 1 + 1 ⊗ ∂ on degree-homogeneous tensor chains (mod 2).
TensorFaceChain tensor_boundary(const TensorFaceChain& c);

struct ChainMapReport {
  int n = 0;
  bool pass = true;
  std::vector<Face> offending;
};

/// Cellular diagonal on the associahedra K_2..K_nmax.
///
/// K_2 and K_3 are pinned. For each larger top cell the chain-map equation
/// ∂Δ(e) = Δ(∂e) is solved over GF(2), with Δ on the boundary known by
/// multiplicativity over the factors of each proper face. Among the
/// solutions containing v_leftcomb ⊗ e and e ⊗ v_rightcomb the one whose
/// indicator vector is least (first term in canonical order most
/// significant) is kept. Top cells are solved on first use and cached;
/// the object may be shared between threads.
class Diagonal {
 public:
  static constexpr int kDefaultMaxLeaves = 6;

  explicit Diagonal(int max_leaves = kDefaultMaxLeaves);
  Diagonal(const Diagonal&) = delete;
  Diagonal& operator=(const Diagonal&) = delete;

  int max_leaves() const noexcept { return max_leaves_; }

  TensorFaceChain operator()(const Face& f) const;
  /// Δ on the top cell of K_n.
  const TensorFaceChain& top_cell(int n) const;

  /// Left-parenthesised iterate (Δ ⊗ 1^{k-2}) ∘ … ∘ Δ; k = 1 is the face.
  IteratedChain iterate(const Face& f, int k) const;

  ChainMapReport verify_chain_map(int n) const;

 private:
  TensorFaceChain solve_top_cell(int n) const;
  void check_bound(int n) const;

  int max_leaves_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<int, TensorFaceChain> top_;
};

/// Process-wide diagonal honouring the default bound.
const Diagonal& default_diagonal();

}  // namespace ainfty
