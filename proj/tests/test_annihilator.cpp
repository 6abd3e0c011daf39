#include "doctest.h"
#include "bt/annihilator.hpp"

using namespace bt;

TEST_CASE("quotient dimensions by counting") {
  CHECK(ptl_dim(1) == 1);
  CHECK(ptl_dim(3) == 29);
  CHECK(ptl_dim(4) == 334);
  CHECK(ptl_dim(5) == 5512);
  const long full[] = {0, 1, 4, 30, 360, 6240};
  for (int n = 1; n <= 5; ++n) CHECK(etl_dim(n, n) == full[n]);
  for (int n = 1; n <= 5; ++n)
    for (int N = 1; N <= 3; ++N) {
      long pred = 0;
      for (auto& alpha : integer_partitions(n)) pred += predicted_dim(n, N, alpha);
      CHECK(pred + etl_dim(n, N) == full[n]);
    }
}

TEST_CASE("predicted annihilator sizes") {
  long total3 = 0, total4 = 0;
  for (auto& alpha : integer_partitions(3)) {
    total3 += static_cast<long>(predicted_annihilator(3, 2, alpha).size());
    CHECK(predicted_annihilator(3, 3, alpha).empty());
  }
  for (auto& alpha : integer_partitions(4)) total4 += predicted_dim(4, 2, alpha);
  CHECK(total3 == 1);
  CHECK(total4 == 26);
}

TEST_CASE("brute force agrees with the prediction at n = 3") {
  auto pts = default_points();
  long total = 0;
  for (auto& alpha : integer_partitions(3))
    for (int N : {2, 3}) {
      auto rep = verify_predicted_basis(3, N, alpha, pts);
      CHECK(rep.match);
      CHECK(rep.kills);
      CHECK(rep.independent);
      CHECK(rep.per_point.size() == 3);
      if (N == 2) total += rep.bruteforce;
      if (N == 3) CHECK(rep.bruteforce == 0);
    }
  CHECK(total == 1);
}

TEST_CASE("the kernel does not move at q0 = 1") {
  std::vector<EvalPoint> one{{Rational(1), 0}, {Rational(1), 1000000007}};
  for (auto& alpha : integer_partitions(3)) {
    auto r = bruteforce_annihilator_dim(alpha, 2, one);
    CHECK(r.per_point[0] == predicted_dim(3, 2, alpha));
    CHECK(r.per_point[1] == predicted_dim(3, 2, alpha));
  }
}

TEST_CASE("Steinberg ideal at n = 3") {
  EvalPoint pt{Rational(2), 1000000007};
  long total = 0;
  for (auto& alpha : integer_partitions(3)) {
    long d = steinberg_ideal_dim(3, alpha, 1, pt);
    CHECK(d == bruteforce_dim(alpha, 2, pt));
    total += d;
  }
  CHECK(total == 1);
}

TEST_CASE("evaluation points") {
  CHECK(default_points().size() == 3);
  CHECK(default_points()[2].str() == "5/7");
  CHECK(default_points()[0].str() == "2 mod 1000000007");
  CHECK_THROWS(bruteforce_dim({2, 1}, 2, EvalPoint{Rational(2), 12}));
  CHECK_THROWS(bruteforce_dim({2, 1}, 2, EvalPoint{Rational(0), 0}));
}

TEST_CASE("tensor space is faithful with enough room") {
  auto pt = default_points()[0];
  CHECK(faithful_kernel_dim(3, 3, 3, pt) == 0);
  CHECK(faithful_kernel_dim(2, 2, 2, pt) == 0);
  // one value and one colour only see the trivial block
  CHECK(faithful_kernel_dim(2, 1, 1, pt) == 3);
}

TEST_CASE("cellular bases are independent at n = 3") {
  for (const auto& alpha : integer_partitions(3)) {
    auto rep = cellular_independence(3, alpha, default_points()[2]);
    CHECK(rep.ok());
  }
}
