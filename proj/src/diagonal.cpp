#include "ainfty/diagonal.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "ainfty/errors.hpp"

namespace ainfty {

TensorFaceChain tensor_boundary(const TensorFaceChain& c) {
  TensorFaceChain out;
  for (const auto& [a, b] : c) {
    for (const auto& da : boundary(a)) out.toggle({da, b});
    for (const auto& db : boundary(b)) out.toggle({a, db});
  }
  return out;
}

Diagonal::Diagonal(int max_leaves) : max_leaves_(max_leaves) {
  if (max_leaves < 2) throw TableBoundError("diagonal bound must be at least 2");
}

void Diagonal::check_bound(int n) const {
  if (n > max_leaves_) {
    throw TableBoundError("K_" + std::to_string(n) + " exceeds the diagonal bound " + std::to_string(max_leaves_));
  }
}

const TensorFaceChain& Diagonal::top_cell(int n) const {
  check_bound(n);
  std::lock_guard lock(mutex_);
  if (auto it = top_.find(n); it != top_.end()) return it->second;
  TensorFaceChain value;
  if (n == 2) {
    const Face e = Face::corolla(2);
    value.toggle({e, e});
  } else if (n == 3) {
    const Face e = Face::corolla(3);
    value.toggle({left_comb(3), e});
    value.toggle({e, right_comb(3)});
  } else {
    value = solve_top_cell(n);
  }
  return top_.emplace(n, std::move(value)).first->second;
}

TensorFaceChain Diagonal::operator()(const Face& f) const {
  check_bound(f.leaves());
  if (f.is_top()) return top_cell(f.leaves());

  // proper face: product of the diagonals of its nodes, grafted back
  const auto arities = node_arities(f.tree());
  std::vector<std::vector<FacePair>> factors;
  for (int a : arities) {
    const auto& top = top_cell(a);
    factors.emplace_back(top.begin(), top.end());
  }
  TensorFaceChain out;
  std::vector<std::size_t> idx(factors.size(), 0);
  std::vector<PlanarTree> left(factors.size()), right(factors.size());
  while (true) {
    for (std::size_t v = 0; v < factors.size(); ++v) {
      left[v] = factors[v][idx[v]].first.tree();
      right[v] = factors[v][idx[v]].second.tree();
    }
    out.toggle({Face(graft(f.tree(), left)), Face(graft(f.tree(), right))});
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == factors[d].size()) idx[d++] = 0;
    if (d == idx.size()) break;
  }
  return out;
}

IteratedChain Diagonal::iterate(const Face& f, int k) const {
  if (k < 1) throw InvalidArity("iterated diagonal needs k >= 1");
  IteratedChain current;
  current.toggle({f});
  for (int fold = 2; fold <= k; ++fold) {
    IteratedChain next;
    for (const auto& term : current) {
      for (const auto& [a, b] : (*this)(term.front())) {
        FaceTensor t;
        t.reserve(term.size() + 1);
        t.push_back(a);
        t.push_back(b);
        t.insert(t.end(), term.begin() + 1, term.end());
        next.toggle(t);
      }
    }
    current = std::move(next);
  }
  return current;
}

ChainMapReport Diagonal::verify_chain_map(int n) const {
  ChainMapReport report;
  report.n = n;
  for (const auto& f : faces_of(n)) {
    TensorFaceChain rhs;
    for (const auto& g : boundary(f)) rhs += (*this)(g);
    if (tensor_boundary((*this)(f)) != rhs) {
      report.pass = false;
      report.offending.push_back(f);
    }
  }
  return report;
}

namespace {

class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : words_((cols + 64) / 64), cols_(cols), bits_(rows * words_, 0) {}

  std::size_t rows() const { return bits_.size() / words_; }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }
  void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  // the last column holds the right-hand side
  std::size_t rhs_col() const { return cols_; }
  std::size_t words() const { return words_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + words_, row(b));
  }
  void add_row(std::size_t dst, std::size_t src, std::size_t from_word) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = from_word; w < words_; ++w) d[w] ^= s[w];
  }

 private:
  std::size_t words_;
  std::size_t cols_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

TensorFaceChain Diagonal::solve_top_cell(int n) const {
  const Face e = Face::corolla(n);
  const auto by_dim = enumerate_faces(n);
  const int target = n - 2;

  std::vector<FacePair> unknowns;
  for (const auto& [da, fa] : by_dim) {
    auto it = by_dim.find(target - da);
    if (it == by_dim.end()) continue;
    for (const auto& a : fa)
      for (const auto& b : it->second) unknowns.emplace_back(a, b);
  }
  std::sort(unknowns.begin(), unknowns.end());

  const FacePair forced_left{left_comb(n), e};
  const FacePair forced_right{e, right_comb(n)};

  TensorFaceChain rhs;
  for (const auto& g : boundary(e)) rhs += (*this)(g);
  const TensorFaceChain expected = rhs;
  TensorFaceChain forced{forced_left, forced_right};
  rhs += tensor_boundary(forced);

  // columns: free unknowns, least significant (last in canonical order) first
  std::vector<FacePair> columns;
  for (auto it = unknowns.rbegin(); it != unknowns.rend(); ++it) {
    if (*it != forced_left && *it != forced_right) columns.push_back(*it);
  }

  std::map<FacePair, std::size_t> row_of;
  std::vector<std::vector<std::size_t>> column_rows(columns.size());
  auto row_index = [&](const FacePair& p) {
    auto [it, inserted] = row_of.emplace(p, row_of.size());
    return it->second;
  };
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& p : tensor_boundary(TensorFaceChain{columns[c]})) column_rows[c].push_back(row_index(p));
  }
  std::vector<std::size_t> rhs_rows;
  for (const auto& p : rhs) rhs_rows.push_back(row_index(p));

  BitMatrix m(row_of.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (auto r : column_rows[c]) m.flip(r, c);
  for (auto r : rhs_rows) m.flip(r, m.rhs_col());

  // reduced row echelon form; free variables set to zero give the least solution
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  const std::size_t rows = m.rows();
  for (std::size_t c = 0; c < columns.size() && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && !m.get(p, c)) ++p;
    if (p == rows) continue;
    m.swap_rows(rank, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && m.get(r, c)) m.add_row(r, rank, c / 64);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (m.get(r, m.rhs_col())) {
      throw DiagonalConstructionError("no chain-map diagonal on the top cell of K_" + std::to_string(n));
    }
  }

  TensorFaceChain solution = forced;
  for (std::size_t r = 0; r < rank; ++r) {
    if (m.get(r, m.rhs_col())) solution.toggle(columns[pivot_col[r]]);
  }
  if (tensor_boundary(solution) != expected) {
    throw DiagonalConstructionError("solver produced a non chain-map on K_" + std::to_string(n));
  }
  return solution;
}

const Diagonal& default_diagonal() {
  static const Diagonal instance = [] {
    int bound = Diagonal::kDefaultMaxLeaves;
    if (const char* env = std::getenv("AINFTY_NMAX")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 2 && v <= 9) bound = static_cast<int>(v);
    }
    return Diagonal(bound);
  }();
  return instance;
}

}  // namespace ainfty
