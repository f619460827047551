#include <q3inv/zoo.hpp>

#include <q3inv/uq_sl2.hpp>

#include <array>
#include <stdexcept>

namespace q3inv {

bool FiniteGroupTable::valid() const {
  if (order == 0 || mulTable.size() != size_t(order) * order || invTable.size() != order)
    return false;
  for (unsigned x : mulTable)
    if (x >= order) return false;
  for (unsigned g = 0; g < order; ++g) {
    if (mul(identity, g) != g || mul(g, identity) != g) return false;
    if (mul(g, inv(g)) != identity || mul(inv(g), g) != identity) return false;
  }
  for (unsigned a = 0; a < order; ++a)
    for (unsigned b = 0; b < order; ++b)
      for (unsigned c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

FiniteGroupTable FiniteGroupTable::cyclic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  FiniteGroupTable G;
  G.order = n;
  G.identity = 0;
  G.mulTable.resize(size_t(n) * n);
  G.invTable.resize(n);
  G.names.resize(n);
  for (unsigned a = 0; a < n; ++a) {
    G.invTable[a] = (n - a) % n;
    G.names[a] = "g^" + std::to_string(a);
    for (unsigned b = 0; b < n; ++b) G.mulTable[a * n + b] = (a + b) % n;
  }
  if (n > 1) G.generators = {1};
  return G;
}

FiniteGroupTable FiniteGroupTable::symmetric3() {
  // Permutations of {0,1,2} as value arrays; composition (pq)(i) = p(q(i)).
  const std::array<std::array<unsigned, 3>, 6> perms = {{{0, 1, 2},
                                                         {1, 0, 2},
                                                         {2, 1, 0},
                                                         {0, 2, 1},
                                                         {1, 2, 0},
                                                         {2, 0, 1}}};
  const std::array<const char*, 6> names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
  FiniteGroupTable G;
  G.order = 6;
  G.identity = 0;
  G.mulTable.resize(36);
  G.invTable.resize(6);
  G.names.assign(names.begin(), names.end());
  auto index_of = [&](const std::array<unsigned, 3>& p) -> unsigned {
    for (unsigned i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw std::logic_error("permutation not found");
  };
  for (unsigned a = 0; a < 6; ++a)
    for (unsigned b = 0; b < 6; ++b) {
      std::array<unsigned, 3> comp;
      for (unsigned i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
      G.mulTable[a * 6 + b] = index_of(comp);
    }
  for (unsigned a = 0; a < 6; ++a)
    for (unsigned b = 0; b < 6; ++b)
      if (G.mulTable[a * 6 + b] == 0) G.invTable[a] = b;
  G.generators = {1, 4};  // a transposition and a 3-cycle
  return G;
}

HopfAlgebra group_algebra(const FiniteGroupTable& G) {
  if (!G.valid()) throw std::invalid_argument("invalid group table");
  const unsigned n = G.order;
  HopfAlgebra H;
  H.dim = n;
  H.family = "group";
  H.familyParam = n;
  H.labels = G.names;
  H.mul.resize(size_t(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) H.mul[a * n + b] = {{G.mul(a, b), Cyclotomic::one()}};
  H.unit = Elem(n);
  H.unit[G.identity] = Cyclotomic::one();
  H.comul.resize(n);
  for (unsigned a = 0; a < n; ++a) H.comul[a] = {{a, a, Cyclotomic::one()}};
  H.counit.assign(n, Cyclotomic::one());
  H.antipode = Matrix(n, n);
  for (unsigned a = 0; a < n; ++a) H.antipode.at(G.inv(a), a) = Cyclotomic::one();
  TensorElement R(2);
  R.add({G.identity, G.identity}, Cyclotomic::one());
  H.R = std::move(R);
  H.G = H.unit;
  H.generators = G.generators;
  return H;
}

HopfAlgebra function_algebra(const FiniteGroupTable& G) {
  if (!G.valid()) throw std::invalid_argument("invalid group table");
  const unsigned n = G.order;
  HopfAlgebra H;
  H.dim = n;
  H.family = "function";
  H.familyParam = n;
  H.labels.resize(n);
  for (unsigned a = 0; a < n; ++a) H.labels[a] = "d_" + G.names[a];
  H.mul.resize(size_t(n) * n);
  for (unsigned a = 0; a < n; ++a) H.mul[a * n + a] = {{a, Cyclotomic::one()}};
  H.unit.assign(n, Cyclotomic::one());
  H.comul.resize(n);
  for (unsigned g = 0; g < n; ++g)
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        if (G.mul(a, b) == g) H.comul[g].push_back({a, b, Cyclotomic::one()});
  H.counit.assign(n, Cyclotomic::zero());
  H.counit[G.identity] = Cyclotomic::one();
  H.antipode = Matrix(n, n);
  for (unsigned a = 0; a < n; ++a) H.antipode.at(G.inv(a), a) = Cyclotomic::one();
  return H;
}

HopfAlgebra drinfeld_double(const FiniteGroupTable& G) {
  if (!G.valid()) throw std::invalid_argument("invalid group table");
  const unsigned n = G.order;
  const unsigned dim = n * n;
  auto id = [n](unsigned g, unsigned x) { return g * n + x; };
  HopfAlgebra H;
  H.dim = dim;
  H.family = "double";
  H.familyParam = n;
  H.labels.resize(dim);
  for (unsigned g = 0; g < n; ++g)
    for (unsigned x = 0; x < n; ++x) H.labels[id(g, x)] = "d_" + G.names[g] + "*" + G.names[x];
  // (delta_g ⊗ x)(delta_h ⊗ y) = [g = x h x^{-1}] delta_g ⊗ xy
  H.mul.resize(size_t(dim) * dim);
  for (unsigned g = 0; g < n; ++g)
    for (unsigned x = 0; x < n; ++x)
      for (unsigned h = 0; h < n; ++h)
        for (unsigned y = 0; y < n; ++y) {
          if (g != G.mul(G.mul(x, h), G.inv(x))) continue;
          H.mul[id(g, x) * dim + id(h, y)] = {{id(g, G.mul(x, y)), Cyclotomic::one()}};
        }
  H.unit = Elem(dim);
  for (unsigned g = 0; g < n; ++g) H.unit[id(g, G.identity)] = Cyclotomic::one();
  // Delta(delta_g ⊗ x) = sum_{ab=g} (delta_a ⊗ x) ⊗ (delta_b ⊗ x)
  H.comul.resize(dim);
  for (unsigned g = 0; g < n; ++g)
    for (unsigned x = 0; x < n; ++x)
      for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
          if (G.mul(a, b) == g) H.comul[id(g, x)].push_back({id(a, x), id(b, x), Cyclotomic::one()});
  H.counit.assign(dim, Cyclotomic::zero());
  for (unsigned x = 0; x < n; ++x) H.counit[id(G.identity, x)] = Cyclotomic::one();
  // S(delta_g ⊗ x) = delta_{x^{-1} g^{-1} x} ⊗ x^{-1}
  H.antipode = Matrix(dim, dim);
  for (unsigned g = 0; g < n; ++g)
    for (unsigned x = 0; x < n; ++x) {
      unsigned tg = G.mul(G.mul(G.inv(x), G.inv(g)), x);
      H.antipode.at(id(tg, G.inv(x)), id(g, x)) = Cyclotomic::one();
    }
  // R = sum_{h,g} (delta_h ⊗ e) ⊗ (delta_g ⊗ h)
  TensorElement R(2);
  for (unsigned h = 0; h < n; ++h)
    for (unsigned g = 0; g < n; ++g) R.add({id(h, G.identity), id(g, h)}, Cyclotomic::one());
  H.R = std::move(R);
  H.G = H.unit;
  return H;
}

HopfAlgebra trivial_algebra() {
  HopfAlgebra H = group_algebra(FiniteGroupTable::cyclic(1));
  H.family = "trivial";
  H.familyParam = 0;
  H.labels = {"1"};
  return H;
}

HopfAlgebra make_algebra(const std::string& name) {
  HopfAlgebra H;
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  auto parse_group = [&](const std::string& a) -> FiniteGroupTable {
    if (a == "S3") return FiniteGroupTable::symmetric3();
    if (a.size() > 1 && a[0] == 'Z') return FiniteGroupTable::cyclic(std::stoul(a.substr(1)));
    throw std::invalid_argument("unknown group spec: " + a);
  };
  if (name == "trivial") {
    H = trivial_algebra();
  } else if (kind == "group") {
    H = group_algebra(parse_group(arg));
  } else if (kind == "double") {
    H = drinfeld_double(parse_group(arg));
  } else if (kind == "uq_sl2") {
    H = uq_sl2(std::stol(arg));
  } else {
    throw std::invalid_argument("unknown algebra name: " + name);
  }
  derive_ribbon_data(H);
  return H;
}

std::vector<std::string> algebra_registry() {
  return {"trivial",   "group:Z2",  "group:Z3", "group:S3", "double:Z2",
          "double:Z3", "double:S3", "uq_sl2:3", "uq_sl2:5"};
}

}  // namespace q3inv
