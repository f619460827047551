#pragma once

#include <q3inv/cyclotomic.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace q3inv {

// Sparse element of A^(⊗k) over a fixed basis of A: multi-index -> scalar.
// Zero coefficients are never stored; std::map keys give the canonical
// lexicographic term order.
class TensorElement {
 public:
  using Index = std::vector<uint32_t>;

  explicit TensorElement(unsigned arity = 0) : arity_(arity) {}

  unsigned arity() const { return arity_; }
  const std::map<Index, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Accumulates c at the index, erasing the slot if the sum vanishes.
  void add(const Index& idx, const Cyclotomic& c);
  const Cyclotomic& coeff(const Index& idx) const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  TensorElement scaled(const Cyclotomic& s) const;

  bool operator==(const TensorElement& o) const;
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

  // Legs rearranged so new leg i is old leg perm[i].
  TensorElement permuted(const std::vector<unsigned>& perm) const;
  // Swap of the two legs of an arity-2 element.
  TensorElement flipped() const;

  static TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

 private:
  unsigned arity_;
  std::map<Index, Cyclotomic> terms_;
};

}  // namespace q3inv
