#include <q3inv/tensor.hpp>

#include <stdexcept>

namespace q3inv {

void TensorElement::add(const Index& idx, const Cyclotomic& c) {
  if (idx.size() != arity_) throw std::invalid_argument("tensor index arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

const Cyclotomic& TensorElement::coeff(const Index& idx) const {
  static const Cyclotomic kZero = Cyclotomic::zero();
  auto it = terms_.find(idx);
  return it == terms_.end() ? kZero : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("tensor sum arity mismatch");
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("tensor diff arity mismatch");
  for (const auto& [idx, c] : o.terms_) add(idx, -c);
  return *this;
}

TensorElement TensorElement::scaled(const Cyclotomic& s) const {
  TensorElement r(arity_);
  if (s.is_zero()) return r;
  for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, c * s);
  return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return arity_ == o.arity_ && terms_ == o.terms_;
}

TensorElement TensorElement::permuted(const std::vector<unsigned>& perm) const {
  if (perm.size() != arity_) throw std::invalid_argument("permutation size mismatch");
  TensorElement r(arity_);
  Index tmp(arity_);
  for (const auto& [idx, c] : terms_) {
    for (unsigned i = 0; i < arity_; ++i) tmp[i] = idx[perm[i]];
    r.add(tmp, c);
  }
  return r;
}

TensorElement TensorElement::flipped() const { return permuted({1u, 0u}); }

TensorElement TensorElement::tensor_product(const TensorElement& a, const TensorElement& b) {
  TensorElement r(a.arity_ + b.arity_);
  Index idx(a.arity_ + b.arity_);
  for (const auto& [ia, ca] : a.terms_) {
    std::copy(ia.begin(), ia.end(), idx.begin());
    for (const auto& [ib, cb] : b.terms_) {
      std::copy(ib.begin(), ib.end(), idx.begin() + a.arity_);
      r.add(idx, ca * cb);
    }
  }
  return r;
}

}  // namespace q3inv
