#include "doctest.h"

#include "oracles.hpp"

#include "gakit/error.hpp"
#include "gakit/euclidean.hpp"
#include "gakit/sampling.hpp"

using namespace gakit;

namespace {

Multivector e(int n, BladeMask m, double c = 1.0) { return Multivector::blade(n, m, c); }

// Coefficient of X _| Y on e_C fixed by (X _| Y) . e_C = Y . (reverse(X) ^ e_C).
Multivector contract_left_by_duality(const Multivector& x, const Multivector& y) {
  Multivector out(x.dim());
  for (std::size_t c = 0; c < out.size(); ++c) {
    const Multivector basis = e(x.dim(), static_cast<BladeMask>(c));
    double sum = 0.0;
    const Multivector w = oracle::wedge_by_parity(reverse(x), basis);
    for (std::size_t k = 0; k < out.size(); ++k) sum += y[static_cast<BladeMask>(k)] * w[static_cast<BladeMask>(k)];
    out[static_cast<BladeMask>(c)] = sum;
  }
  return out;
}

} // namespace

TEST_SUITE("euclidean") {

TEST_CASE("exterior product examples") {
  const int n = 3;
  CHECK(wedge(e(n, 0b1), e(n, 0b1)).is_zero());
  CHECK(wedge(e(n, 0b1), e(n, 0b10)) == e(n, 0b11));
  CHECK(wedge(e(n, 0b10), e(n, 0b1)) == e(n, 0b11, -1.0));
  CHECK(wedge(Multivector::scalar(n, 1.0) + e(n, 0b1), e(n, 0b10)) == e(n, 0b10) + e(n, 0b11));
}

TEST_CASE("exterior product agrees with the permutation-parity oracle") {
  Sampler s(1);
  for (int t = 0; t < 40; ++t) {
    const int n = s.integer(1, 6);
    const Multivector x = s.multivector(n), y = s.multivector(n);
    CHECK(max_abs_diff(wedge(x, y), oracle::wedge_by_parity(x, y)) < 1e-13);
  }
}

TEST_CASE("graded commutativity of the exterior product") {
  Sampler s(2);
  for (int t = 0; t < 40; ++t) {
    const int n = s.integer(1, 6), p = s.integer(0, n), q = s.integer(0, n);
    const Multivector a = s.homogeneous(n, p), b = s.homogeneous(n, q);
    CHECK(max_abs_diff(wedge(a, b), ((p * q) % 2 ? -1.0 : 1.0) * wedge(b, a)) < 1e-13);
  }
}

TEST_CASE("scalar product examples") {
  const int n = 3;
  CHECK(scalar_product(e(n, 0b11), e(n, 0b11)) == 1.0);
  CHECK(scalar_product(e(n, 0b1), e(n, 0b11)) == 0.0);
  CHECK(scalar_product(Multivector::scalar(n, 2.0), Multivector::scalar(n, 3.5)) == 7.0);
}

TEST_CASE("scalar product of wedged vectors is the Gram determinant") {
  Sampler s(3);
  for (int t = 0; t < 40; ++t) {
    const int n = s.integer(1, 5), k = s.integer(1, n);
    std::vector<Vector> vs, ws;
    Multivector a = Multivector::scalar(n, 1.0), b = Multivector::scalar(n, 1.0);
    for (int i = 0; i < k; ++i) {
      vs.push_back(s.vector(n));
      ws.push_back(s.vector(n));
      a = wedge(a, Multivector::vector(n, vs.back()));
      b = wedge(b, Multivector::vector(n, ws.back()));
    }
    Matrix gram(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) gram(i, j) = dot(vs[static_cast<std::size_t>(i)], ws[static_cast<std::size_t>(j)]);
    }
    CHECK(scalar_product(a, b) == doctest::Approx(oracle::leibniz_det(gram)).epsilon(1e-12));
  }
}

TEST_CASE("contraction examples") {
  const int n = 3;
  CHECK(contract_left(e(n, 0b1), e(n, 0b11)) == e(n, 0b10));
  CHECK(contract_left(e(n, 0b11), e(n, 0b11)) == Multivector::scalar(n, -1.0));
  const Multivector x = e(n, 0b101, 2.0) + e(n, 0b10);
  CHECK(contract_left(Multivector::scalar(n, 3.0), x) == 3.0 * x);
  CHECK(contract_right(e(n, 0b11), e(n, 0b10)) == e(n, 0b1));
  CHECK(contract_left(e(n, 0b11), e(n, 0b1)).is_zero());
}

TEST_CASE("left contraction agrees with the duality oracle over all basis blades") {
  Sampler s(4);
  for (int t = 0; t < 30; ++t) {
    const int n = s.integer(1, 5);
    const Multivector x = s.multivector(n), y = s.multivector(n);
    CHECK(max_abs_diff(contract_left(x, y), contract_left_by_duality(x, y)) < 1e-12);
  }
}

TEST_CASE("contraction grade rules and equal-grade case") {
  Sampler s(5);
  for (int t = 0; t < 40; ++t) {
    const int n = s.integer(1, 5), q = s.integer(0, n), p = s.integer(0, q);
    const Multivector x = s.homogeneous(n, p), y = s.homogeneous(n, q);
    const Multivector l = contract_left(x, y);
    CHECK(max_abs_diff(l, grade_project(l, q - p)) == 0.0);
    const Multivector z = s.homogeneous(n, q);
    CHECK(contract_left(z, y).scalar_part() == doctest::Approx(scalar_product(reverse(z), y)).epsilon(1e-12));
    CHECK(max_abs_diff(contract_left(x, y), ((p * (q - p)) % 2 ? -1.0 : 1.0) * contract_right(y, x)) < 1e-13);
  }
}

TEST_CASE("contraction dualities on nonhomogeneous inputs") {
  Sampler s(6);
  for (int t = 0; t < 40; ++t) {
    const int n = s.integer(2, 5);
    const Multivector x = s.multivector(n), y = s.multivector(n), z = s.multivector(n);
    CHECK(scalar_product(contract_left(x, y), z) == doctest::Approx(scalar_product(y, wedge(reverse(x), z))).epsilon(1e-12));
    CHECK(scalar_product(contract_right(x, y), z) == doctest::Approx(scalar_product(x, wedge(z, reverse(y)))).epsilon(1e-12));
    CHECK(max_abs_diff(contract_left(x, contract_left(y, z)), contract_left(wedge(x, y), z)) < 1e-12);
    CHECK(max_abs_diff(contract_right(contract_right(x, y), z), contract_right(x, wedge(y, z))) < 1e-12);
  }
}

TEST_CASE("Clifford product examples") {
  const int n = 3;
  CHECK(clifford_product(e(n, 0b1), e(n, 0b1)) == Multivector::scalar(n, 1.0));
  CHECK(clifford_product(e(n, 0b1), e(n, 0b10)) == e(n, 0b11));
  const Multivector e1e2 = clifford_product(e(n, 0b1), e(n, 0b10));
  const Multivector e2e1 = clifford_product(e(n, 0b10), e(n, 0b1));
  CHECK(clifford_product(e1e2, e2e1) == Multivector::scalar(n, 1.0));
  CHECK(clifford_product(e(n, 0b11), e(n, 0b11)) == Multivector::scalar(n, -1.0));
}

TEST_CASE("Clifford product agrees with the word-reduction oracle") {
  Sampler s(7);
  for (int t = 0; t < 20; ++t) {
    const int n = s.integer(1, 4);
    const Matrix id = Matrix::identity(n);
    const Multivector x = s.multivector(n), y = s.multivector(n);
    const auto expected = oracle::poly_product(oracle::to_poly(x, id), oracle::to_poly(y, id), id);
    CHECK(oracle::poly_diff(oracle::to_poly(clifford_product(x, y), id), expected) < 1e-12);
  }
}

TEST_CASE("Clifford product is associative with exact signs on all blade triples at n = 4") {
  const int n = 4;
  for (BladeMask a = 0; a < 16; ++a) {
    for (BladeMask b = 0; b < 16; ++b) {
      const Multivector ab = clifford_product(e(n, a), e(n, b));
      for (BladeMask c = 0; c < 16; ++c) {
        REQUIRE(clifford_product(ab, e(n, c)) == clifford_product(e(n, a), clifford_product(e(n, b), e(n, c))));
      }
    }
  }
}

TEST_CASE("vector Clifford product splits into contraction and exterior parts") {
  Sampler s(8);
  for (int t = 0; t < 40; ++t) {
    const int n = s.integer(1, 5);
    const Multivector v = Multivector::vector(n, s.vector(n)), x = s.multivector(n);
    CHECK(max_abs_diff(clifford_product(v, x), contract_left(v, x) + wedge(v, x)) < 1e-13);
    CHECK(max_abs_diff(clifford_product(x, v), contract_right(x, v) + wedge(x, v)) < 1e-13);
  }
}

TEST_CASE("grade structure of homogeneous Clifford products") {
  Sampler s(9);
  for (int t = 0; t < 40; ++t) {
    const int n = s.integer(1, 5), r = s.integer(0, n), q = s.integer(0, n);
    const Multivector p = clifford_product(s.homogeneous(n, r), s.homogeneous(n, q));
    for (int k = 0; k <= n; ++k) {
      const bool allowed = k >= std::abs(r - q) && k <= r + q && (k - std::abs(r - q)) % 2 == 0;
      if (!allowed) CHECK(grade_project(p, k).is_zero());
    }
  }
}

TEST_CASE("commutator") {
  const int n = 3;
  CHECK(commutator(e(n, 0b11), e(n, 0b1)) == -e(n, 0b10));
  Sampler s(10);
  const Multivector x = s.multivector(n);
  CHECK(commutator(x, x).is_zero());
  CHECK(commutator(Multivector::scalar(n, 4.0), x).is_zero());
}

TEST_CASE("mixed dimensions are rejected") {
  CHECK_THROWS_AS(wedge(Multivector(2), Multivector(3)), ArgumentError);
  CHECK_THROWS_AS(clifford_product(Multivector(2), Multivector(3)), ArgumentError);
  CHECK_THROWS_AS(scalar_product(Multivector(2), Multivector(3)), ArgumentError);
}

} // TEST_SUITE
