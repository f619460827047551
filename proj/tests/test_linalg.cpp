#include <doctest.h>

#include <q3inv/linalg.hpp>

using namespace q3inv;

namespace {

Cyclotomic Q(long n, long d = 1) { return Cyclotomic::from_rational(make_rational(n, d)); }

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Q(rows[r][c]);
  return m;
}

std::vector<std::vector<Rational>> rat_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long x : r) row.push_back(make_rational(x, 1));
    m.push_back(std::move(row));
  }
  return m;
}

bool annihilates(const Matrix& m, const Vec& v) {
  Vec out = m.apply(v);
  for (const auto& c : out)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("matrix product, identity, transpose") {
  Matrix a = from_rows({{1, 2}, {3, 4}});
  Matrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * Matrix::identity(2) == a);
  CHECK(Matrix::identity(2) * a == a);
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
  CHECK((a - a).is_zero());
  CHECK(a + a == a.scaled(Q(2)));
  Vec v{Q(5), Q(7)};
  Vec av = a.apply(v);
  CHECK(av[0] == Q(19));
  CHECK(av[1] == Q(43));
}

TEST_CASE("rref pivots and rank") {
  Matrix m = from_rows({{1, 2}, {2, 4}});
  CHECK(rank(m) == 1);
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(2, 5)) == 0);

  Matrix n = from_rows({{0, 1, 2}, {0, 0, 3}});
  auto pivots = rref(n);
  REQUIRE(pivots.size() == 2);
  CHECK(pivots[0] == 1);
  CHECK(pivots[1] == 2);
  // Fully reduced: pivot entries are 1, entries above pivots are 0.
  CHECK(n.at(0, 1) == Q(1));
  CHECK(n.at(0, 2) == Q(0));
  CHECK(n.at(1, 2) == Q(1));
}

TEST_CASE("kernel basis spans the null space") {
  Matrix m = from_rows({{1, 2}, {2, 4}});
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(annihilates(m, ker[0]));

  Matrix row = from_rows({{1, 1, 1}});
  auto k3 = kernel_basis(row);
  REQUIRE(k3.size() == 2);
  for (const auto& v : k3) CHECK(annihilates(row, v));
  // The two kernel vectors are independent.
  Matrix stacked(2, 3);
  for (size_t j = 0; j < 3; ++j) {
    stacked.at(0, j) = k3[0][j];
    stacked.at(1, j) = k3[1][j];
  }
  CHECK(rank(stacked) == 2);

  CHECK(kernel_basis(Matrix::identity(4)).empty());
}

TEST_CASE("solve linear systems") {
  Matrix m = from_rows({{1, 1}, {0, 1}});
  auto x = solve(m, Vec{Q(3), Q(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Q(1));
  CHECK((*x)[1] == Q(2));

  Matrix s = from_rows({{1, 2}, {2, 4}});
  CHECK_FALSE(solve(s, Vec{Q(1), Q(0)}).has_value());

  auto y = solve(s, Vec{Q(1), Q(2)});
  REQUIRE(y.has_value());
  Vec sy = s.apply(*y);
  CHECK(sy[0] == Q(1));
  CHECK(sy[1] == Q(2));
}

TEST_CASE("matrix inverse") {
  Matrix m = from_rows({{1, 1}, {0, 1}});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(2));
  CHECK(*inv * m == Matrix::identity(2));

  CHECK_FALSE(inverse(from_rows({{1, 2}, {2, 4}})).has_value());

  // Cyclotomic entries.
  Matrix z(2, 2);
  z.at(0, 0) = Cyclotomic::root_of_unity(5);
  z.at(0, 1) = Q(1);
  z.at(1, 1) = Q(1);
  auto zi = inverse(z);
  REQUIRE(zi.has_value());
  CHECK(z * *zi == Matrix::identity(2));
}

TEST_CASE("incremental row space") {
  RowSpace rs(3);
  CHECK(rs.nullity() == 3);
  CHECK(rs.insert(Vec{Q(1), Q(1), Q(0)}));
  CHECK_FALSE(rs.insert(Vec{Q(2), Q(2), Q(0)}));  // dependent
  CHECK(rs.insert(Vec{Q(0), Q(1), Q(1)}));
  CHECK(rs.rank() == 2);
  CHECK(rs.nullity() == 1);

  auto ker = rs.kernel();
  REQUIRE(ker.size() == 1);
  // Kernel vector is orthogonal to both inserted rows.
  CHECK(ker[0][0] + ker[0][1] == Q(0));
  CHECK(ker[0][1] + ker[0][2] == Q(0));

  CHECK_FALSE(rs.insert(Vec{Q(0), Q(0), Q(0)}));
}

TEST_CASE("signature of symmetric rational matrices") {
  CHECK(rational_signature(rat_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) ==
        std::make_pair(3, 0));
  CHECK(rational_signature(rat_rows({{-1, 0}, {0, -2}})) == std::make_pair(0, 2));
  CHECK(rational_signature(rat_rows({{0, 1}, {1, 0}})) == std::make_pair(1, 1));
  CHECK(rational_signature(rat_rows({{0, 2}, {2, 0}})) == std::make_pair(1, 1));
  CHECK(rational_signature(rat_rows({{2, 1}, {1, 2}})) == std::make_pair(2, 0));
  // Eigenvalues 3 and -1.
  CHECK(rational_signature(rat_rows({{1, 2}, {2, 1}})) == std::make_pair(1, 1));
  CHECK(rational_signature(rat_rows({{0, 0}, {0, 0}})) == std::make_pair(0, 0));
  CHECK(rational_signature(rat_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})) ==
        std::make_pair(3, 0));
  CHECK(rational_signature(rat_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}})) ==
        std::make_pair(1, 1));
  CHECK(rational_signature({}) == std::make_pair(0, 0));
}
