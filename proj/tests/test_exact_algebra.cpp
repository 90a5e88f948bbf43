#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "hbn/binary_form.hpp"
#include "hbn/birkhoff.hpp"
#include "hbn/determinant.hpp"
#include "hbn/dual.hpp"
#include "hbn/linalg.hpp"
#include "hbn/poly.hpp"
#include "hbn/resultant.hpp"

using namespace hbn;

namespace {

// Rank over Q by fraction-free Bareiss elimination on integers.
int rational_rank(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

// Determinant by the permutation expansion.
PrimeField::Elem leibniz_det(const PrimeField& F, const std::vector<std::vector<PrimeField::Elem>>& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  PrimeField::Elem total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    PrimeField::Elem term = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term = F.mul(term, m[i][perm[i]]);
    total = inversions % 2 ? F.sub(total, term) : F.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

LaurentPoly lp(const PrimeField& F, int power, std::int64_t c = 1) {
  return LaurentPoly::monomial(F, power, F.from_int(c));
}

// Product of elementary matrices whose off-diagonal entries are polynomials in
// z (toward_infinity = false) or in 1/z (true), times a constant permutation.
TransitionMatrix random_unimodular(const PrimeField& F, std::size_t r, bool toward_infinity, Rng& rng) {
  TransitionMatrix u(r, std::vector<LaurentPoly>(r, LaurentPoly(F)));
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < r; ++i) u[i][perm[i]] = lp(F, 0, 1 + static_cast<int>(rng() % 5));
  for (int step = 0; step < 3 && r > 1; ++step) {
    TransitionMatrix e(r, std::vector<LaurentPoly>(r, LaurentPoly(F)));
    for (std::size_t i = 0; i < r; ++i) e[i][i] = lp(F, 0);
    const std::size_t i = rng() % r;
    std::size_t j = rng() % r;
    if (j == i) j = (i + 1) % r;
    LaurentPoly entry(F);
    for (int d = 0; d <= 2; ++d) {
      entry += lp(F, toward_infinity ? -d : d, static_cast<std::int64_t>(rng() % 7) - 3);
    }
    e[i][j] = entry;
    u = matrix_product(u, e);
  }
  return u;
}

}  // namespace

TEST_CASE("form_mul examples") {
  PrimeField f7(7);
  auto p = form_mul(BinaryForm(f7, 1, {1, 1}), BinaryForm(f7, 1, {1, 6}));
  CHECK(p.coefficients() == std::vector<PrimeField::Elem>{1, 0, 6});

  auto z = form_mul(BinaryForm::zero(f7, 2), BinaryForm(f7, 1, {1, 1}));
  CHECK(z.is_zero());
  CHECK(z.degree() == 3);

  PrimeField f5(5);
  auto q = form_mul(BinaryForm(f5, 1, {2, 3}), BinaryForm(f5, 1, {1, 1}));
  CHECK(q.coefficients() == std::vector<PrimeField::Elem>{2, 0, 3});
}

TEST_CASE("form_mul is a commutative, associative, degree-additive homomorphism") {
  PrimeField F;
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = BinaryForm::random(F, static_cast<int>(rng() % 5), rng);
    auto b = BinaryForm::random(F, static_cast<int>(rng() % 5), rng);
    auto c = BinaryForm::random(F, static_cast<int>(rng() % 5), rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
  auto a = BinaryForm::random(F, 4, rng);
  auto b = BinaryForm::random(F, 3, rng);
  const auto ab = a * b;
  for (int pt = 0; pt < 100; ++pt) {
    const auto s = F.random(rng);
    const auto t = F.random(rng);
    CHECK(ab.evaluate(s, t) == F.mul(a.evaluate(s, t), b.evaluate(s, t)));
  }
}

TEST_CASE("form evaluation matches the monomial sum") {
  PrimeField F(101);
  BinaryForm f(F, 3, {2, 5, 7, 11});
  const PrimeField::Elem s = 3;
  const PrimeField::Elem t = 4;
  PrimeField::Elem direct = 0;
  for (int i = 0; i <= 3; ++i) {
    direct = F.add(direct, F.mul(f.coeff(i), F.mul(F.pow(s, 3 - i), F.pow(t, i))));
  }
  CHECK(f.evaluate(s, t) == direct);
  CHECK(f.evaluate_affine(F, t) == f.evaluate(1, t));
}

TEST_CASE("dual numbers obey the product and Leibniz rules") {
  PrimeField F;
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = BinaryForm::random(F, 2, rng), a1 = BinaryForm::random(F, 2, rng);
    auto b = BinaryForm::random(F, 3, rng), b1 = BinaryForm::random(F, 3, rng);
    auto c = BinaryForm::random(F, 1, rng), c1 = BinaryForm::random(F, 1, rng);
    DualForm x(a, a1), y(b, b1), z(c, c1);
    auto xy = x * y;
    CHECK(xy.value == a * b);
    CHECK(*xy.eps == a * b1 + a1 * b);
    auto xyz = x * y * z;
    CHECK(*xyz.eps == a1 * b * c + a * b1 * c + a * b * c1);
  }
  DualForm plain(BinaryForm(F, 1, {1, 2}));
  CHECK_FALSE((plain * plain).eps.has_value());
}

TEST_CASE("Laplace determinant agrees with the permutation expansion") {
  PrimeField F;
  Rng rng(17);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::vector<PrimeField::Elem>> raw(n, std::vector<PrimeField::Elem>(n));
    SquareMatrix<Poly<PrimeField>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        raw[i][j] = F.random(rng);
        m[i].push_back(Poly<PrimeField>::constant(F, raw[i][j]));
      }
    }
    const auto det = laplace_determinant(m, Poly<PrimeField>::constant(F, 1));
    CHECK(det.coeff(0) == leibniz_det(F, raw));
    CHECK(matrix_determinant(FpMatrix::from_rows(F, raw)) == leibniz_det(F, raw));
  }
}

TEST_CASE("resultant examples") {
  PrimeField F(7);
  const auto s = BivariatePoly::s(F);
  const auto t = BivariatePoly::t(F);
  const auto one = BivariatePoly::constant(F, 1);
  const auto zero = BivariatePoly(F);
  CHECK(resultant({-s, one}, {-t, one}) == s - t);
  CHECK(resultant({zero, zero, one}, {zero, one}).is_zero());
  CHECK(resultant({-t, zero, one}, {-s, one}) == s * s - t);
  CHECK_THROWS(resultant({zero}, {zero}));
}

TEST_CASE("resultant vanishes exactly on a common factor") {
  PrimeField F;
  Rng rng(23);
  using P = Poly<PrimeField>;
  auto random_poly = [&](int deg) {
    std::vector<PrimeField::Elem> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = F.random(rng);
    c.back() = F.random_nonzero(rng);
    return P(F, c);
  };
  auto as_constants = [&](const P& p) {
    std::vector<P> out;
    for (int i = 0; i <= p.degree(); ++i) out.push_back(P::constant(F, p.coeff(i)));
    return out;
  };
  const P zero(F);
  const P one = P::constant(F, 1);
  for (int trial = 0; trial < 200; ++trial) {
    P a = random_poly(1 + static_cast<int>(rng() % 4));
    P b = random_poly(1 + static_cast<int>(rng() % 4));
    if (trial % 2 == 0) {
      const P common = random_poly(1 + static_cast<int>(rng() % 2));
      a = a * common;
      b = b * common;
    }
    const auto res = sylvester_resultant(as_constants(a), as_constants(b), zero, one);
    CHECK(res.is_zero() == (gcd(a, b).degree() > 0));
  }
}

TEST_CASE("matrix_rank examples") {
  PrimeField F;
  CHECK(matrix_rank(FpMatrix::from_rows(F, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(matrix_rank(FpMatrix(F, 4, 2)) == 0);
  CHECK(matrix_rank(FpMatrix::from_rows(F, {{1, 0}, {0, 0}})) == 1);
  CHECK(matrix_rank(FpMatrix::from_rows(F, {{1, 0}, {1, 1}})) == 2);
}

TEST_CASE("matrix_rank agrees with rank over the rationals") {
  Rng rng(29);
  PrimeField F;
  PrimeField backup(10009);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<std::int64_t>> a(6, std::vector<std::int64_t>(6));
    // Low-rank products half the time so that deficient cases occur.
    const int inner = trial % 2 ? 6 : 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<std::int64_t>> l(6, std::vector<std::int64_t>(inner));
    std::vector<std::vector<std::int64_t>> r(inner, std::vector<std::int64_t>(6));
    for (auto& row : l) for (auto& v : row) v = static_cast<std::int64_t>(rng() % 7) - 3;
    for (auto& row : r) for (auto& v : row) v = static_cast<std::int64_t>(rng() % 7) - 3;
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        for (int q = 0; q < inner; ++q) a[i][j] += l[i][q] * r[q][j];
      }
    }
    auto reduce = [&](const PrimeField& field) {
      FpMatrix m(field, 6, 6);
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) m(i, j) = field.from_int(a[i][j]);
      }
      return static_cast<int>(matrix_rank(m));
    };
    const int expected = rational_rank(a);
    int got = reduce(F);
    if (got != expected) got = reduce(backup);
    CHECK(got == expected);
  }
}

TEST_CASE("delayed-reduction rank matches plain elimination") {
  Rng rng(31);
  for (std::uint32_t p : {10007u, 65537u, 2147483647u}) {
    const PrimeField F(p);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t rows = 20 + rng() % 30;
      const std::size_t cols = 20 + rng() % 60;
      const std::size_t inner = 1 + rng() % std::min(rows, cols);
      FpMatrix l(F, rows, inner);
      FpMatrix r(F, inner, cols);
      for (std::size_t i = 0; i < rows; ++i) for (std::size_t q = 0; q < inner; ++q) l(i, q) = F.random(rng);
      for (std::size_t q = 0; q < inner; ++q) for (std::size_t j = 0; j < cols; ++j) r(q, j) = F.random(rng);
      FpMatrix m(F, rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          for (std::size_t q = 0; q < inner; ++q) m(i, j) = F.add(m(i, j), F.mul(l(i, q), r(q, j)));
        }
      }
      CHECK(matrix_rank(m) == matrix_rank<PrimeField>(m));
    }
  }
}

TEST_CASE("kernel_basis spans the null space") {
  PrimeField F;
  auto m = FpMatrix::from_rows(F, {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  const auto basis = kernel_basis(m);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      PrimeField::Elem acc = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) acc = F.add(acc, F.mul(m(i, j), v[j]));
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("roots over F_p and F_p^2") {
  PrimeField F(10007);
  Rng rng(3);
  auto f = BinaryForm::from_roots(F, {5, 17, 1234}).at_s_one();
  CHECK(roots(f, rng) == std::vector<PrimeField::Elem>{5, 17, 1234});
  // t^2 - n has no root in F_p but two in F_p^2.
  const auto n = F.nonresidue();
  Poly<PrimeField> irreducible(F, {F.neg(n), 0, 1});
  CHECK(roots(irreducible, rng).empty());
  QuadraticExtension E(F);
  CHECK(roots(lift(E, irreducible), rng).size() == 2);
}

TEST_CASE("birkhoff_splitting examples") {
  PrimeField F;
  Rng rng(41);
  const LaurentPoly zero(F);
  CHECK(birkhoff_splitting({{lp(F, -1), zero}, {zero, lp(F, 2)}}) == std::vector<int>{-1, 2});

  const TransitionMatrix trivial{{lp(F, 0), zero}, {zero, lp(F, 0)}};
  auto twisted = matrix_product(random_unimodular(F, 2, true, rng),
                                matrix_product(trivial, random_unimodular(F, 2, false, rng)));
  CHECK(birkhoff_splitting(twisted) == std::vector<int>{0, 0});

  CHECK(birkhoff_splitting({{lp(F, 0), lp(F, -1)}, {zero, lp(F, -2)}}) == std::vector<int>{-1, -1});
  CHECK_THROWS(birkhoff_splitting({{lp(F, 0), lp(F, 0)}, {lp(F, 0), lp(F, 0)}}));
  CHECK_THROWS(birkhoff_splitting({{lp(F, 0) + lp(F, 1), zero}, {zero, lp(F, 0)}}));
}

TEST_CASE("birkhoff factorization reproduces the input") {
  PrimeField F;
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 3;
    TransitionMatrix diag(r, std::vector<LaurentPoly>(r, LaurentPoly(F)));
    std::vector<int> degrees;
    for (std::size_t i = 0; i < r; ++i) {
      degrees.push_back(static_cast<int>(rng() % 7) - 3);
      diag[i][i] = lp(F, degrees.back());
    }
    const auto t = matrix_product(random_unimodular(F, r, true, rng),
                                  matrix_product(diag, random_unimodular(F, r, false, rng)));
    const auto fac = birkhoff_factorize(t);
    TransitionMatrix middle(r, std::vector<LaurentPoly>(r, LaurentPoly(F)));
    for (std::size_t i = 0; i < r; ++i) middle[i][i] = lp(F, fac.exponents[i]);
    CHECK(matrix_product(fac.left, matrix_product(middle, fac.right)) == t);
    // left is polynomial in 1/z, right in z, both with constant determinant.
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (!fac.left[i][j].is_zero()) CHECK(fac.left[i][j].max_power() <= 0);
        if (!fac.right[i][j].is_zero()) CHECK(fac.right[i][j].min_power() >= 0);
      }
    }
    CHECK(matrix_det(fac.left).is_monomial());
    CHECK(matrix_det(fac.left).min_power() == 0);
    CHECK(matrix_det(fac.right).min_power() == 0);
    std::sort(degrees.begin(), degrees.end());
    CHECK(fac.splitting == degrees);
    const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    CHECK(matrix_det(t).min_power() == total);
  }
}
