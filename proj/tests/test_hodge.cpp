#include "doctest.h"

#include "gakit/error.hpp"
#include "gakit/euclidean.hpp"
#include "gakit/hodge.hpp"
#include "gakit/sampling.hpp"

#include <cmath>

using namespace gakit;

namespace {

Multivector e(int n, BladeMask m, double c = 1.0) { return Multivector::blade(n, m, c); }

MetricExtensor diag_metric(std::vector<double> d) { return MetricExtensor(MetricTensor::diagonal(d)); }

double sign_pow(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

} // namespace

TEST_SUITE("hodge") {

TEST_CASE("standard volume") {
  CHECK(standard_volume(1).tau == e(1, 0b1));
  const VolumeElement v = standard_volume(3);
  CHECK(v.tau == e(3, 0b111));
  CHECK(scalar_product(v.tau, v.tau) == 1.0);
  CHECK(clifford_product(v.tau, reverse(v.tau)) == Multivector::scalar(3, 1.0));
  Sampler s(1);
  for (int n = 1; n <= 6; ++n) {
    const Multivector i = s.homogeneous(n, n);
    const Multivector tau = standard_volume(n).tau;
    CHECK(max_abs_diff(scalar_product(i, tau) * tau, i) < 1e-15);
  }
}

TEST_CASE("volume from an arbitrary basis") {
  Sampler s(2);
  const int n = 3;
  std::vector<Vector> basis;
  for (int k = 0; k < n; ++k) basis.push_back(s.vector(n));
  const VolumeElement v = standard_volume(basis);
  CHECK(scalar_product(v.tau, v.tau) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(v.tau[0b111]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("standard Hodge examples") {
  CHECK(hodge_star(e(3, 0b1)) == e(3, 0b110));
  CHECK(hodge_star(Multivector::scalar(3, 1.0)) == e(3, 0b111));
  CHECK(hodge_star(e(3, 0b10)) == e(3, 0b101, -1.0));
  CHECK(hodge_star(e(3, 0b111)) == Multivector::scalar(3, 1.0));
}

TEST_CASE("standard Hodge identities") {
  Sampler s(3);
  for (int t = 0; t < 40; ++t) {
    const int n = s.integer(1, 6);
    const Multivector tau = standard_volume(n).tau;
    const Multivector x = s.multivector(n), y = s.multivector(n);
    CHECK(max_abs_diff(hodge_star_inverse(hodge_star(x)), x) < 1e-14);
    CHECK(scalar_product(hodge_star(x), hodge_star(y)) == doctest::Approx(scalar_product(x, y)).epsilon(1e-12));
    const int k = s.integer(0, n);
    const Multivector a = s.homogeneous(n, k), b = s.homogeneous(n, k), c = s.homogeneous(n, n - k);
    CHECK(max_abs_diff(wedge(a, hodge_star(b)), scalar_product(a, b) * tau) < 1e-13);
    CHECK(max_abs_diff(scalar_product(hodge_star(a), c) * tau, wedge(a, c)) < 1e-13);
    CHECK(max_abs_diff(grade_project(hodge_star(a), n - k), hodge_star(a)) == 0.0);
  }
}

TEST_CASE("metric volume") {
  CHECK(metric_volume(MetricExtensor(MetricTensor::identity(3))).tau == e(3, 0b111));
  const MetricExtensor mink = diag_metric({1, -1, -1, -1});
  const VolumeElement v = metric_volume(mink);
  CHECK(v.tau == e(4, 0b1111));
  CHECK(v.negative_count == 3);
  CHECK(scalar_product_g(v.tau, v.tau, metric_inverse(mink)) == -1.0);
  CHECK(metric_volume(diag_metric({4, 1})).tau == e(2, 0b11, 2.0));
  Sampler s(4);
  for (int t = 0; t < 20; ++t) {
    const MetricExtensor g = s.raw_symmetric_metric(s.integer(1, 6));
    const VolumeElement vg = metric_volume(g);
    CHECK(scalar_product_g(vg.tau, vg.tau, metric_inverse(g)) == doctest::Approx(sign_pow(vg.negative_count)).epsilon(1e-10));
    const Multivector i = s.homogeneous(g.dim(), g.dim());
    CHECK(max_abs_diff(sign_pow(vg.negative_count) * scalar_product_g(i, vg.tau, metric_inverse(g)) * vg.tau, i) < 1e-10);
  }
}

TEST_CASE("metric Hodge examples") {
  const MetricExtensor id(MetricTensor::identity(3));
  Sampler s(5);
  const Multivector x = s.multivector(3);
  CHECK(max_abs_diff(metric_hodge(x, id), hodge_star(x)) < 1e-15);
  const MetricExtensor mink = diag_metric({1, -1, -1, -1});
  const Multivector one = Multivector::scalar(4, 1.0);
  const Multivector tau = e(4, 0b1111);
  CHECK(metric_hodge(one, mink) == tau);
  CHECK(metric_hodge_via_g(one, mink) == tau);
  const Multivector e12 = e(4, 0b11);
  CHECK(max_abs_diff(metric_hodge(e12, mink), metric_hodge_via_g(e12, mink)) < 1e-15);
  CHECK(metric_hodge(e12, mink) == e(4, 0b1100, -1.0));
}

TEST_CASE("metric Hodge identities") {
  Sampler s(6);
  for (int t = 0; t < 30; ++t) {
    const int n = s.integer(1, 5);
    const MetricExtensor g = s.raw_symmetric_metric(n);
    const MetricExtensor gi = metric_inverse(g);
    const VolumeElement vg = metric_volume(g);
    const double sq = sign_pow(vg.negative_count);
    const Multivector x = s.multivector(n), y = s.multivector(n);
    CHECK(max_abs_diff(metric_hodge_inverse(metric_hodge(x, g), g), x) < 1e-9);
    CHECK(scalar_product_g(metric_hodge(x, g), metric_hodge(y, g), gi) ==
          doctest::Approx(sq * scalar_product_g(x, y, gi)).epsilon(1e-9).scale(1.0));
    const int k = s.integer(0, n);
    const Multivector a = s.homogeneous(n, k), b = s.homogeneous(n, k), c = s.homogeneous(n, n - k);
    CHECK(max_abs_diff(wedge(a, metric_hodge(b, g)), scalar_product_g(a, b, gi) * vg.tau) < 1e-9);
    CHECK(max_abs_diff(scalar_product_g(metric_hodge(a, g), c, gi) * vg.tau, sq * wedge(a, c)) < 1e-9);
  }
}

TEST_CASE("three Hodge paths agree on every basis blade") {
  const auto check_paths = [](const MetricExtensor& g, const GaugeExtensor& gauge) {
    for (BladeMask m = 0; m < (1u << g.dim()); ++m) {
      const Multivector b = Multivector::blade(g.dim(), m);
      const Multivector direct = metric_hodge(b, g);
      CHECK(max_abs_diff(direct, metric_hodge_via_g(b, g)) < 1e-9);
      CHECK(max_abs_diff(direct, metric_hodge_via_gauge(b, gauge)) < 1e-9);
    }
  };
  const MetricExtensor d = diag_metric({4, -9});
  check_paths(d, gauge_extensor(d, diag_metric({1, -1})));
  const MetricExtensor id(MetricTensor::identity(3));
  check_paths(id, gauge_extensor(id, id));
  Sampler s(7);
  for (int t = 0; t < 10; ++t) {
    const MetricExtensor g = s.metric(Signature{1, 3});
    check_paths(g, gauge_extensor(g, standard_eta(g.signature())));
  }
  for (int t = 0; t < 10; ++t) {
    const MetricExtensor g = s.raw_symmetric_metric(s.integer(1, 5));
    check_paths(g, gauge_extensor(g, standard_eta(g.signature())));
  }
}

} // TEST_SUITE
