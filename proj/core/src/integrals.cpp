#include <q3inv/hopf.hpp>

#include <functional>
#include <stdexcept>

namespace q3inv {

namespace {

// Sparse product e_i * x * S(e_j) used by the adjoint action.
Elem sandwich(const HopfAlgebra& H, unsigned i, const Elem& x, unsigned j) {
  Elem ix = H.basis_mul(i, x);
  Elem r(H.dim);
  for (unsigned s = 0; s < H.dim; ++s) {
    if (H.antipode.at(s, j).is_zero()) continue;
    Elem part = H.mul_basis(ix, s);
    for (unsigned k = 0; k < H.dim; ++k)
      if (!part[k].is_zero()) r[k] += part[k] * H.antipode.at(s, j);
  }
  return r;
}

// Solves a homogeneous system expected to have a 1-dimensional solution
// space. rows_for(y) appends the constraint rows contributed by basis index
// y; verify(candidate) must re-check the full defining property.
Vec solve_unique_line(const HopfAlgebra& H,
                      const std::function<void(unsigned, std::vector<Vec>&)>& rows_for,
                      const std::function<bool(const Vec&)>& verify, const char* what) {
  RowSpace rs(H.dim);
  std::vector<Vec> rows;
  bool done = false;
  for (unsigned y = 0; y < H.dim && !done; ++y) {
    rows.clear();
    rows_for(y, rows);
    for (auto& row : rows) {
      bool nonzero = false;
      for (const auto& c : row)
        if (!c.is_zero()) {
          nonzero = true;
          break;
        }
      if (!nonzero) continue;
      rs.insert(std::move(row));
      if (rs.nullity() <= 1) {
        done = true;
        break;
      }
    }
  }
  if (rs.nullity() == 0)
    throw std::runtime_error(std::string(what) + ": solution space has dimension 0");
  if (rs.nullity() > 1)
    throw std::runtime_error(std::string(what) + ": solution space has dimension " +
                             std::to_string(rs.nullity()));
  Vec cand = rs.kernel().front();
  // Deterministic scale: first nonzero coordinate = 1.
  for (unsigned i = 0; i < H.dim; ++i)
    if (!cand[i].is_zero()) {
      Cyclotomic inv = cand[i].inverse();
      for (auto& c : cand) c *= inv;
      break;
    }
  if (!verify(cand))
    throw std::runtime_error(std::string(what) +
                             ": candidate from the row subset fails the full conditions");
  return cand;
}

}  // namespace

IntegralSet solve_integrals(const HopfAlgebra& H) {
  const unsigned n = H.dim;

  // Left integral: (id ⊗ muL)(Delta(y)) = muL(y) * 1.
  auto rows_muL = [&](unsigned y, std::vector<Vec>& rows) {
    std::vector<Vec> r(n, Vec(n));
    std::vector<bool> touched(n, false);
    for (const auto& [j, k, c] : H.comul[y]) {
      r[j][k] += c;
      touched[j] = true;
    }
    for (unsigned i = 0; i < n; ++i) {
      if (!H.unit[i].is_zero()) {
        r[i][y] -= H.unit[i];
        touched[i] = true;
      }
      if (touched[i]) rows.push_back(std::move(r[i]));
    }
  };
  auto verify_muL = [&](const Vec& m) {
    for (unsigned y = 0; y < n; ++y) {
      Elem lhs(n);
      for (const auto& [j, k, c] : H.comul[y])
        if (!m[k].is_zero()) lhs[j] += c * m[k];
      for (unsigned i = 0; i < n; ++i)
        if (lhs[i] != m[y] * H.unit[i]) return false;
    }
    return true;
  };

  // Right integral: (muR ⊗ id)(Delta(y)) = muR(y) * 1.
  auto rows_muR = [&](unsigned y, std::vector<Vec>& rows) {
    std::vector<Vec> r(n, Vec(n));
    std::vector<bool> touched(n, false);
    for (const auto& [j, k, c] : H.comul[y]) {
      r[k][j] += c;
      touched[k] = true;
    }
    for (unsigned i = 0; i < n; ++i) {
      if (!H.unit[i].is_zero()) {
        r[i][y] -= H.unit[i];
        touched[i] = true;
      }
      if (touched[i]) rows.push_back(std::move(r[i]));
    }
  };
  auto verify_muR = [&](const Vec& m) {
    for (unsigned y = 0; y < n; ++y) {
      Elem lhs(n);
      for (const auto& [j, k, c] : H.comul[y])
        if (!m[j].is_zero()) lhs[k] += c * m[j];
      for (unsigned i = 0; i < n; ++i)
        if (lhs[i] != m[y] * H.unit[i]) return false;
    }
    return true;
  };

  // Left cointegral element: y * lambda = eps(y) * lambda.
  auto rows_lambda = [&](unsigned y, std::vector<Vec>& rows) {
    std::vector<Vec> r(n, Vec(n));
    std::vector<bool> touched(n, false);
    for (unsigned j = 0; j < n; ++j)
      for (const auto& [k, c] : H.mul[y * n + j]) {
        r[k][j] += c;
        touched[k] = true;
      }
    for (unsigned k = 0; k < n; ++k) {
      if (!H.counit[y].is_zero()) {
        r[k][k] -= H.counit[y];
        touched[k] = true;
      }
      if (touched[k]) rows.push_back(std::move(r[k]));
    }
  };
  auto verify_lambda = [&](const Vec& l) {
    for (unsigned y = 0; y < n; ++y) {
      Elem lhs = H.basis_mul(y, l);
      for (unsigned k = 0; k < n; ++k)
        if (lhs[k] != H.counit[y] * l[k]) return false;
    }
    return true;
  };

  IntegralSet I;
  I.muL = solve_unique_line(H, rows_muL, verify_muL, "left integral");
  I.muR = solve_unique_line(H, rows_muR, verify_muR, "right integral");
  I.lambda = solve_unique_line(H, rows_lambda, verify_lambda, "cointegral");

  Cyclotomic duality = H.form_on(I.muR, I.lambda);
  if (duality.is_zero())
    throw std::runtime_error("integral duality failure: muR(lambda) = 0");
  Cyclotomic inv = duality.inverse();
  for (auto& c : I.lambda) c *= inv;
  I.normalized = true;
  return I;
}

std::vector<Elem> center_basis(const HopfAlgebra& H) {
  const unsigned n = H.dim;
  // Subspace of elements commuting with the generators, refined generator by
  // generator, then verified against the entire basis.
  std::vector<Elem> space;
  for (unsigned i = 0; i < n; ++i) space.push_back(H.basis_elem(i));

  for (unsigned g : H.generating_indices()) {
    if (space.empty()) break;
    Matrix C(n, space.size());
    for (size_t w = 0; w < space.size(); ++w) {
      Elem comm = H.basis_mul(g, space[w]);
      Elem wg = H.mul_basis(space[w], g);
      for (unsigned k = 0; k < n; ++k) C.at(k, w) = comm[k] - wg[k];
    }
    std::vector<Vec> alphas = kernel_basis(C);
    std::vector<Elem> refined;
    for (const auto& a : alphas) {
      Elem z(n);
      for (size_t w = 0; w < space.size(); ++w) {
        if (a[w].is_zero()) continue;
        for (unsigned k = 0; k < n; ++k)
          if (!space[w][k].is_zero()) z[k] += a[w] * space[w][k];
      }
      refined.push_back(std::move(z));
    }
    space = std::move(refined);
  }

  for (const auto& z : space)
    if (!H.is_central(z))
      throw std::logic_error("center candidate fails to commute with the full basis "
                             "(generator list does not generate)");
  return space;
}

bool coadjoint_invariance_check(const TensorElement& X, const HopfAlgebra& H) {
  const unsigned N = X.arity();
  if (N == 0) return true;
  for (unsigned a : H.generating_indices()) {
    TensorElement D = H.iterated_comul(H.basis_elem(a), 2 * N);
    TensorElement acc(N);
    TensorElement::Index out(N);
    for (const auto& [t, c] : D.terms()) {
      for (const auto& [xi, cx] : X.terms()) {
        std::vector<Elem> legs(N);
        bool zero = false;
        for (unsigned l = 0; l < N && !zero; ++l) {
          // Nested sandwiches: leg l is conjugated by the l-th
          // comultiplication leg on the left and its mirror on the right,
          // the pattern of a single strand encircling all open ends.
          legs[l] = sandwich(H, t[l], H.basis_elem(xi[l]), t[2 * N - 1 - l]);
          zero = H.elem_is_zero(legs[l]);
        }
        if (zero) continue;
        std::vector<std::vector<std::pair<unsigned, const Cyclotomic*>>> sparse(N);
        for (unsigned l = 0; l < N; ++l)
          for (unsigned k = 0; k < H.dim; ++k)
            if (!legs[l][k].is_zero()) sparse[l].push_back({k, &legs[l][k]});
        std::vector<size_t> pos(N, 0);
        Cyclotomic base = c * cx;
        while (true) {
          Cyclotomic val = base;
          for (unsigned l = 0; l < N; ++l) {
            out[l] = sparse[l][pos[l]].first;
            val *= *sparse[l][pos[l]].second;
          }
          acc.add(out, val);
          unsigned l = 0;
          while (l < N) {
            if (++pos[l] < sparse[l].size()) break;
            pos[l] = 0;
            ++l;
          }
          if (l == N) break;
        }
      }
    }
    if (acc != X.scaled(H.counit[a])) return false;
  }
  return true;
}

}  // namespace q3inv
