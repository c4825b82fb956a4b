#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cellres/matrix.hpp"

using namespace cellres;

namespace {

// Laplace expansion along the first row. Exponential, only for small n;
// serves as an independent check on the Bareiss elimination.
Int det_laplace(const IntMat& A) {
  int n = A.rows;
  if (n == 0) return Int(1);
  if (n == 1) return A.at(0, 0);
  Int d(0);
  for (int j = 0; j < n; ++j) {
    if (A.at(0, j) == 0) continue;
    IntMat S(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        S.at(i - 1, cc++) = A.at(i, c);
      }
    }
    Int t = A.at(0, j) * det_laplace(S);
    if (j % 2 == 1) t = -t;
    d += t;
  }
  return d;
}

IntMat random_mat(std::mt19937_64& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
  return m;
}

bool is_zero_col(const IntMat& M, int j) {
  for (int i = 0; i < M.rows; ++i)
    if (M.at(i, j) != 0) return false;
  return true;
}

// Column echelon shape with positive pivots and left-of-pivot reduction.
void check_hnf_shape(const IntMat& H) {
  int prev_pivot_row = -1;
  bool seen_zero = false;
  for (int j = 0; j < H.cols; ++j) {
    if (is_zero_col(H, j)) {
      seen_zero = true;
      continue;
    }
    CHECK(!seen_zero);  // zero columns trail
    int pr = 0;
    while (H.at(pr, j) == 0) ++pr;
    CHECK(pr > prev_pivot_row);
    CHECK(H.at(pr, j) > 0);
    for (int jj = 0; jj < j; ++jj) {
      CHECK(H.at(pr, jj) >= 0);
      CHECK(H.at(pr, jj) < H.at(pr, j));
    }
    prev_pivot_row = pr;
  }
}

}  // namespace

TEST_CASE("hnf worked example") {
  IntMat A = IntMat::from_rows({{2, 4}, {0, 6}});
  auto hf = hermite_normal_form(A);
  CHECK(hf.H == IntMat::from_rows({{2, 0}, {0, 6}}));
  CHECK(A.mul(hf.U) == hf.H);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(20260822);
  for (int t = 0; t < 200; ++t) {
    int r = 1 + static_cast<int>(rng() % 5);
    int c = 1 + static_cast<int>(rng() % 5);
    IntMat A = random_mat(rng, r, c, -9, 9);
    auto hf = hermite_normal_form(A);
    CHECK(A.mul(hf.U) == hf.H);
    Int du = det_int(hf.U);
    CHECK((du == 1 || du == -1));
    check_hnf_shape(hf.H);
  }
}

TEST_CASE("hnf is a lattice invariant") {
  // Same column lattice, different generating sets, identical H.
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    IntMat A = random_mat(rng, 3, 3, -6, 6);
    IntMat M = random_mat(rng, 3, 3, -3, 3);
    // Force M unimodular by shearing: build from identity with random axpys.
    IntMat V = IntMat::identity(3);
    for (int s = 0; s < 6; ++s) {
      int j1 = static_cast<int>(rng() % 3), j2 = static_cast<int>(rng() % 3);
      if (j1 == j2) continue;
      Int q(static_cast<long>(rng() % 7) - 3);
      for (int i = 0; i < 3; ++i) V.at(i, j2) += q * V.at(i, j1);
    }
    auto h1 = hermite_normal_form(A);
    auto h2 = hermite_normal_form(A.mul(V));
    CHECK(h1.H == h2.H);
  }
}

TEST_CASE("snf worked examples") {
  {
    IntMat A = IntMat::from_rows({{2, 0}, {0, 3}});
    auto sf = smith_normal_form(A);
    CHECK(sf.D == IntMat::from_rows({{1, 0}, {0, 6}}));
    CHECK(sf.P.mul(A).mul(sf.Q) == sf.D);
  }
  {
    IntMat Z(2, 2);
    auto sf = smith_normal_form(Z);
    CHECK(sf.D == Z);
    CHECK(sf.P == IntMat::identity(2));
    CHECK(sf.Q == IntMat::identity(2));
  }
  {
    IntMat A = IntMat::from_rows({{6}});
    auto sf = smith_normal_form(A);
    CHECK(sf.D == A);
  }
}

TEST_CASE("snf properties on random matrices") {
  std::mt19937_64 rng(424242);
  for (int t = 0; t < 200; ++t) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMat A = random_mat(rng, r, c, -8, 8);
    auto sf = smith_normal_form(A);
    CHECK(sf.P.mul(A).mul(sf.Q) == sf.D);
    Int dp = det_int(sf.P), dq = det_int(sf.Q);
    CHECK((dp == 1 || dp == -1));
    CHECK((dq == 1 || dq == -1));
    int n = std::min(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(sf.D.at(i, j) == 0);
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(sf.D.at(i, i) >= 0);
      if (sf.D.at(i + 1, i + 1) != 0) {
        if (sf.D.at(i, i) == 0) {
          CHECK(false);  // zero may not precede nonzero
        } else {
          CHECK(sf.D.at(i + 1, i + 1) % sf.D.at(i, i) == 0);
        }
      }
    }
  }
}

TEST_CASE("kernel basis") {
  {
    IntMat pi = IntMat::from_rows({{1, 1}});
    IntMat K = kernel_basis(pi);
    CHECK(K == IntMat::from_cols({{1, -1}}));
  }
  {
    IntMat pi = IntMat::from_rows({{1, 1, 1}});
    IntMat K = kernel_basis(pi);
    CHECK(K.cols == 2);
    CHECK(pi.mul(K) == IntMat(1, 2));
  }
  {
    IntMat A = IntMat::identity(3);
    IntMat K = kernel_basis(A);
    CHECK(K.rows == 3);
    CHECK(K.cols == 0);
  }
}

TEST_CASE("kernel is saturated and canonical") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 120; ++t) {
    int r = 1 + static_cast<int>(rng() % 3);
    int c = 1 + static_cast<int>(rng() % 5);
    IntMat A = random_mat(rng, r, c, -5, 5);
    IntMat K = kernel_basis(A);
    CHECK(A.mul(K) == IntMat(r, K.cols));
    CHECK(K.cols == c - rank_of(A));
    // Doubling A's entries does not change the kernel.
    IntMat A2 = A;
    for (auto& x : A2.a) x *= 2;
    CHECK(kernel_basis(A2) == K);
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + static_cast<int>(rng() % 5);
    IntMat A = random_mat(rng, n, n, -7, 7);
    CHECK(det_int(A) == det_laplace(A));
  }
  CHECK(det_int(IntMat(0, 0)) == 1);
}

TEST_CASE("rational solve") {
  IntMat A = IntMat::from_rows({{2, 1}, {1, 3}});
  RatVec b = {Rat(1), Rat(0)};
  auto x = solve_rational(A, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(3, 5));
  CHECK((*x)[1] == Rat(-1, 5));

  IntMat C = IntMat::from_rows({{1, 1}, {2, 2}});
  CHECK(!solve_rational(C, RatVec{Rat(0), Rat(1)}).has_value());
  auto y = solve_rational(C, RatVec{Rat(1), Rat(2)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == Rat(1));
}

TEST_CASE("solve on random systems") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 120; ++t) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMat A = random_mat(rng, r, c, -6, 6);
    IntMat xs = random_mat(rng, c, 1, -6, 6);
    RatVec b(r);
    IntVec bi = A.mul_vec(xs.col(0));
    for (int i = 0; i < r; ++i) b[i] = Rat(bi[i]);
    auto x = solve_rational(A, b);  // consistent by construction
    REQUIRE(x.has_value());
    RatVec Ax = A.mul_vec(*x);
    for (int i = 0; i < r; ++i) CHECK(Ax[i] == b[i]);
  }
}

TEST_CASE("matrix inverse") {
  RatMat A = RatMat::from_int(IntMat::from_rows({{2, 1}, {1, 1}}));
  RatMat X = inverse(A);
  CHECK(X.at(0, 0) == Rat(1));
  CHECK(X.at(0, 1) == Rat(-1));
  CHECK(X.at(1, 0) == Rat(-1));
  CHECK(X.at(1, 1) == Rat(2));
  RatMat S = RatMat::from_int(IntMat::from_rows({{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(inverse(S), input_error);
}

TEST_CASE("unimodular column test") {
  CHECK(is_unimodular_cols(IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}})));
  CHECK(is_unimodular_cols(IntMat::from_rows({{1, 0}, {1, 1}, {0, 1}, {-1, -1}})));
  // Contains a 2x2 minor of determinant 2.
  CHECK(!is_unimodular_cols(IntMat::from_rows({{1, 0}, {2, 1}, {1, 1}, {0, 1}, {-1, -1}})));
  CHECK_THROWS_AS(is_unimodular_cols(IntMat::from_rows({{1, 1}, {2, 2}})), input_error);
}

TEST_CASE("cokernel presentations of ray matrices") {
  {
    IntMat B = IntMat::from_rows({{1}, {-1}});
    auto cp = cokernel_presentation(B);
    CHECK(cp.free_rank == 1);
    CHECK(cp.moduli == std::vector<Int>{Int(0)});
    CHECK(cp.proj == IntMat::from_rows({{1, 1}}));
  }
  {
    IntMat B = IntMat::from_rows({{1, 0}, {0, 1}, {-1, -1}});
    auto cp = cokernel_presentation(B);
    CHECK(cp.free_rank == 1);
    CHECK(cp.proj == IntMat::from_rows({{1, 1, 1}}));
  }
  {
    IntMat B = IntMat::from_rows({{1, 0}, {1, 1}, {0, 1}, {-1, -1}});
    auto cp = cokernel_presentation(B);
    CHECK(cp.free_rank == 2);
    CHECK(cp.proj == IntMat::from_rows({{1, -1, 1, 0}, {0, 1, 0, 1}}));
  }
  {
    // Torsion: Z^2 / <(2,0),(0,1)> = Z/2.
    IntMat A = IntMat::from_rows({{2, 0}, {0, 1}});
    auto cp = cokernel_presentation(A);
    CHECK(cp.free_rank == 0);
    REQUIRE(cp.moduli.size() == 1);
    CHECK(cp.moduli[0] == 2);
  }
}

TEST_CASE("cokernel presentation is a valid quotient map") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 80; ++t) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMat A = random_mat(rng, r, c, -5, 5);
    auto cp = cokernel_presentation(A);
    // Every generator of the image maps to zero.
    for (int j = 0; j < c; ++j) {
      IntVec d = cp.degree(A.col(j));
      for (const auto& x : d) CHECK(x == 0);
    }
    CHECK(cp.free_rank == r - rank_of(A));
    // The map Z^r -> presentation is surjective: stacked proj has SNF all 1s
    // after accounting moduli; cheap proxy check via free part rank.
    if (cp.proj.rows > 0) {
      CHECK(rank_of(cp.proj) == cp.proj.rows);
    }
  }
}
