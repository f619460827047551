#pragma once

#include <q3inv/cyclotomic.hpp>
#include <q3inv/linalg.hpp>
#include <q3inv/tensor.hpp>

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace q3inv {

// Dense element of the algebra in basis coordinates.
using Elem = std::vector<Cyclotomic>;
// Linear form on the algebra (element of the dual) in dual-basis coordinates.
using LinearForm = std::vector<Cyclotomic>;

// Base class for engine-specific fast paths (attached by algebra families
// whose structure admits specialized exact kernels). Consumers dynamic_cast
// to the interface they need and fall back to generic code when absent.
struct EngineHooks {
  virtual ~EngineHooks() = default;
};

// A finite-dimensional Hopf algebra presented by exact structure constants,
// with optional quasitriangular (R) and balancing (G) data and the ribbon
// elements derived from them.
struct HopfAlgebra {
  unsigned dim = 0;
  std::vector<std::string> labels;
  std::string family;  // "trivial", "group", "function", "double", "uq_sl2"
  long familyParam = 0;

  // e_i e_j = sum_k mul[i*dim+j] -> (k, c).
  std::vector<std::vector<std::pair<unsigned, Cyclotomic>>> mul;
  Elem unit;
  // Delta(e_i) = sum comul[i] -> (j, k, c) meaning c * e_j (x) e_k.
  std::vector<std::vector<std::tuple<unsigned, unsigned, Cyclotomic>>> comul;
  LinearForm counit;
  Matrix antipode;  // S(e_j) = sum_i antipode(i,j) e_i

  std::optional<TensorElement> R, Rinv;
  std::optional<Elem> G;

  // Ribbon data filled in by derive_ribbon_data.
  std::optional<Elem> u, uInv, uHat, gElem, v, vInv, Ginv;
  std::optional<TensorElement> monodromy;  // R'R
  std::optional<TensorElement> omega;

  std::shared_ptr<EngineHooks> hooks;
  // Indices of a generating set of the algebra (used where checking a
  // multiplicative condition on generators provably extends to the whole
  // algebra); defaults to every basis index.
  std::vector<unsigned> generators;
  std::vector<unsigned> generating_indices() const;

  mutable std::optional<Matrix> antipodeInv_;  // cached S^-1

  // --- element helpers ---
  Elem zero_elem() const { return Elem(dim); }
  Elem basis_elem(unsigned i) const;
  Elem scalar_elem(const Cyclotomic& c) const;  // c * unit
  bool elem_is_zero(const Elem& x) const;
  Elem mul_elems(const Elem& a, const Elem& b) const;
  Elem mul_basis(const Elem& a, unsigned j) const;  // a * e_j
  Elem basis_mul(unsigned i, const Elem& b) const;  // e_i * b
  Elem pow_elem(const Elem& a, long e) const;       // negative powers via invert_elem
  Elem apply_antipode(const Elem& x, long power = 1) const;
  const Matrix& antipode_inverse() const;
  Cyclotomic counit_of(const Elem& x) const;
  Cyclotomic form_on(const LinearForm& f, const Elem& x) const;
  TensorElement comul_of(const Elem& x) const;
  TensorElement comul_op_of(const Elem& x) const;
  // Delta^(legs-1)(x) as an element of A^(⊗legs); legs >= 1.
  TensorElement iterated_comul(const Elem& x, unsigned legs) const;
  bool is_central(const Elem& x) const;
  std::optional<Elem> invert_elem(const Elem& x) const;
  Matrix left_mult_matrix(const Elem& x) const;
  Matrix right_mult_matrix(const Elem& x) const;
  // Component-wise product of equal-arity tensors (product in A^(⊗k)).
  TensorElement mul_tensor(const TensorElement& a, const TensorElement& b) const;
  // x (as arity-1) placed on one leg of the identity: helper products
  TensorElement elem_to_tensor(const Elem& x) const;
  Elem tensor_to_elem(const TensorElement& t) const;  // arity 1 only
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
};

struct CertificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string summary() const;
};

// Verifies every Hopf axiom exactly (and the quasitriangular/ribbon axioms
// when R/G are present), reporting a witness tuple for each failure.
CertificationReport certify_hopf(const HopfAlgebra& H);

// Computes u, uHat, g, v, monodromy and omega from R and G, verifying the
// ribbon identities exactly; throws std::runtime_error naming the first
// violated identity.
void derive_ribbon_data(HopfAlgebra& H);

struct ModularityResult {
  bool modular = false;
  size_t rank = 0;
  bool integralCriterion = false;  // (id ⊗ mu^R)(omega) proportional to lambda
  bool integralCriterionChecked = false;
};

struct IntegralSet;
ModularityResult check_modularity(const HopfAlgebra& H,
                                  const IntegralSet* integrals = nullptr);

struct IntegralSet {
  LinearForm muL;
  LinearForm muR;
  Elem lambda;
  bool normalized = false;  // muR(lambda) == 1
};

// Solves the defining linear systems for the left/right integral forms and
// the cointegral, asserting 1-dimensional solution spaces, and normalizes
// muR(lambda) = 1. Throws std::runtime_error on dimension or duality failure.
IntegralSet solve_integrals(const HopfAlgebra& H);

// Basis of the center, found by intersecting generator commutants and then
// verified to commute with every basis element.
std::vector<Elem> center_basis(const HopfAlgebra& H);

struct CentralElement {
  Elem value;
  bool isCentral = false;
  bool isAntipodeInvariant = false;
};

// Fast paths a family kernel can provide for the expensive exact checks.
// Both reduce an exhaustive condition to the generator list; they are only
// attached by families whose basis consists of left-normed generator words,
// where the reduction is complete by induction on word length.
struct CertifyHooks : virtual EngineHooks {
  // Each returns true on success; on failure fills witness.
  virtual bool fast_associativity(const HopfAlgebra& H, std::string& witness) const = 0;
  virtual bool fast_comul_multiplicative(const HopfAlgebra& H, std::string& witness) const = 0;
};

// Exact check of monodromy = (v ⊗ v) Delta(v^{-1}), phrased as the matrix
// identity (v^{-1} ⊗ v^{-1}) · monodromy = Delta(v^{-1}) (the two are
// equivalent because v is central and invertible, which the caller verifies
// first). Costs two dense matrix products instead of a sparse tensor product
// with quadratic term blowup.
bool monodromy_factorization_check(const HopfAlgebra& H, std::string& witness);

// True iff X in A^(⊗N) is invariant under the nested adjoint action, where
// leg l is conjugated by the l-th comultiplication leg on the left and its
// mirror on the right; checked on a generating set (the action is
// multiplicative in a). At N = 1 this is centrality.
bool coadjoint_invariance_check(const TensorElement& X, const HopfAlgebra& H);

}  // namespace q3inv
