#include <doctest.h>

#include <random>

#include "hooksum/identities.hpp"
#include "hooksum/matrixtree.hpp"
#include "oracles.hpp"

using namespace hooksum;

namespace {

PolyMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  auto pick = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  PolyMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Polynomial p(pick(-3, 3));
      if (pick(0, 1)) p += Polynomial(pick(-2, 2)) * xv(pick(0, 2));
      if (pick(0, 2) == 0) p += yv(1, pick(1, 3));
      m.at(r, c) = p;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("kirchhoff matrix for two labels") {
  PolyMatrix k = build_kirchhoff(LabelSet({1, 2}));
  CHECK(k.at(0, 0) == xv(1) * yv(1, 2));
  CHECK(k.at(0, 1) == -(xv(1) * yv(1, 2)));
  CHECK(k.at(1, 0) == -(xv(1) * yv(2, 2)));
  CHECK(k.at(1, 1) == xv(1) * yv(2, 2));
  CHECK_THROWS_AS(build_kirchhoff(LabelSet({4})), std::invalid_argument);
}

TEST_CASE("kirchhoff diagonal boundary sums") {
  LabelSet a({2, 5, 9});
  PolyMatrix k = build_kirchhoff(a);
  // smallest label: only the y-sum survives
  CHECK(k.at(0, 0) == xv(2) * (yv(2, 5) + yv(2, 9)));
  // largest label: only the x-sum survives
  CHECK(k.at(2, 2) == yv(9, 9) * (xv(2) + xv(5)));
}

TEST_CASE("principal minor drops the first slot") {
  PolyMatrix k = build_kirchhoff(LabelSet({1, 2}));
  PolyMatrix m = principal_minor(k);
  CHECK(m.dim() == 1);
  CHECK(m.at(0, 0) == xv(1) * yv(2, 2));

  PolyMatrix d(3);
  for (std::size_t i = 0; i < 3; ++i) d.at(i, i) = xv(static_cast<int>(i));
  PolyMatrix dm = principal_minor(d);
  CHECK(dm.dim() == 2);
  CHECK(dm.at(0, 0) == xv(1));
  CHECK(dm.at(1, 1) == xv(2));
  CHECK(dm.at(0, 1).is_zero());

  CHECK_THROWS_AS(principal_minor(PolyMatrix(1)), std::invalid_argument);
}

TEST_CASE("exact division") {
  Polynomial a = (xv(1) + yv(2, 2)) * (xv(1) * xv(1) - Polynomial(3) * yv(1, 2));
  CHECK(exact_divide(a, xv(1) + yv(2, 2)) == xv(1) * xv(1) - Polynomial(3) * yv(1, 2));
  CHECK(exact_divide(Polynomial(), xv(1)).is_zero());
  CHECK_THROWS_AS(exact_divide(xv(1) + Polynomial(1), xv(1)), std::logic_error);
  CHECK_THROWS_AS(exact_divide(Polynomial(3) * xv(1), Polynomial(2) * xv(1)),
                  std::logic_error);
  CHECK_THROWS_AS(exact_divide(xv(1), Polynomial()), std::logic_error);
}

TEST_CASE("determinant of small fixed matrices") {
  PolyMatrix one(1);
  one.at(0, 0) = xv(1) + yv(1, 1);
  CHECK(det_exact(one) == xv(1) + yv(1, 1));

  CHECK(det_exact(PolyMatrix(0)) == Polynomial(1));

  PolyMatrix two(2);
  two.at(0, 0) = xv(1);
  two.at(0, 1) = yv(1, 2);
  two.at(1, 0) = xv(2);
  two.at(1, 1) = yv(2, 2);
  CHECK(det_exact(two) == xv(1) * yv(2, 2) - yv(1, 2) * xv(2));

  // zero pivot forces the cofactor fallback
  PolyMatrix z(2);
  z.at(0, 1) = xv(1);
  z.at(1, 0) = xv(2);
  CHECK(det_exact(z) == -(xv(1) * xv(2)));
}

TEST_CASE("determinant for three labels matches the closed product") {
  Polynomial det = det_exact(principal_minor(build_kirchhoff(LabelSet({1, 2, 3}))));
  Polynomial want = xv(1) * yv(3, 3) * (yv(2, 2) * (xv(1) + xv(2)) + xv(2) * yv(2, 3));
  CHECK(det == want);
  CHECK(want == theta_product(LabelSet({1, 2, 3})));
}

TEST_CASE("bareiss agrees with naive cofactor expansion") {
  std::mt19937 rng(777u);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      PolyMatrix m = random_matrix(rng, n);
      CHECK(det_exact(m) == oracles::det_naive(m));
    }
  }
}

TEST_CASE("determinant is multiplicative on block diagonals") {
  std::mt19937 rng(31337u);
  for (int rep = 0; rep < 6; ++rep) {
    PolyMatrix a = random_matrix(rng, 2);
    PolyMatrix b = random_matrix(rng, 3);
    PolyMatrix block(5);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) block.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) block.at(i + 2, j + 2) = b.at(i, j);
    CHECK(det_exact(block) == det_exact(a) * det_exact(b));
  }
}

TEST_CASE("matrix tree check: three routes agree") {
  CHECK(matrix_tree_check(LabelSet({1, 2})).pass);
  CHECK(matrix_tree_check(LabelSet({1, 2, 3})).pass);
  CHECK(matrix_tree_check(LabelSet({2, 5, 9, 11})).pass);
  CHECK(matrix_tree_check(LabelSet({1, 2, 3, 4, 5})).pass);
  CHECK(matrix_tree_check(LabelSet({3, 4, 7, 10})).pass);
}
