#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>

namespace ainfty {

/// Formal sum with coefficients in GF(2): a finite set where adding an
/// element that is already present removes it.
template <typename T, typename Compare = std::less<T>>
class Gf2Sum {
 public:
  using container = std::set<T, Compare>;
  using const_iterator = typename container::const_iterator;
  using value_type = T;

  Gf2Sum() = default;
  Gf2Sum(std::initializer_list<T> terms) {
    for (const auto& t : terms) toggle(t);
  }

  void toggle(const T& term) {
    auto [it, inserted] = terms_.insert(term);
    if (!inserted) terms_.erase(it);
  }

  Gf2Sum& operator+=(const Gf2Sum& other) {
    for (const auto& t : other.terms_) toggle(t);
    return *this;
  }
  friend Gf2Sum operator+(Gf2Sum a, const Gf2Sum& b) { return a += b; }

  bool contains(const T& term) const { return terms_.count(term) != 0; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const noexcept { return terms_; }

  friend bool operator==(const Gf2Sum& a, const Gf2Sum& b) { return a.terms_ == b.terms_; }

 private:
  container terms_;
};

}  // namespace ainfty
