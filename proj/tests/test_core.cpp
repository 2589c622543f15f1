#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <string>
#include <vector>

#include "gammasym/klein.hpp"
#include "gammasym/linalg.hpp"
#include "gammasym/matrix.hpp"
#include "gammasym/rational.hpp"
#include "gammasym/so_algebra.hpp"
#include "support.hpp"

using namespace gammasym;
using test::RatGen;

namespace {

Mat random_antisymmetric(int n, RatGen& gen) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = gen.next();
      m.at(j, i) = -m.at(i, j);
    }
  return m;
}

}  // namespace

TEST_CASE("rational parsing is strict and canonical") {
  SECTION("accepted forms") {
    REQUIRE(parse_rational("3/4") == rat(3, 4));
    REQUIRE(parse_rational("-7") == rat(-7));
    REQUIRE(parse_rational("0/5") == rat(0));
    REQUIRE(parse_rational("+2/4") == rat(1, 2));  // canonicalized
    REQUIRE(parse_rational("-9/6") == rat(-3, 2));
  }
  SECTION("rejected forms") {
    for (const char* bad : {"", "1.5", "3/0", "1/ 2", " 1", "1 ", "x", "1/",
                            "/2", "--3", "1//2", "0x1", "1e3"}) {
      INFO("input: '" << bad << "'");
      REQUIRE_FALSE(parse_rational(bad).has_value());
    }
    REQUIRE_THROWS_AS(parse_rational_or_throw("0.25"), std::invalid_argument);
  }
  SECTION("formatting round-trips through the parser") {
    RatGen gen(11);
    for (int t = 0; t < 50; ++t) {
      Rational r = gen.next();
      REQUIRE(parse_rational(format_rational(r)) == r);
    }
    REQUIRE(format_rational(rat(-1, 3)) == "-1/3");
    REQUIRE(format_rational(rat(4, 2)) == "2");
  }
  SECTION("sign") {
    REQUIRE(sign_of(rat(3, 7)) == 1);
    REQUIRE(sign_of(rat(-3, 7)) == -1);
    REQUIRE(sign_of(rat(0)) == 0);
  }
}

TEST_CASE("Klein four-group law and characters") {
  SECTION("group structure") {
    REQUIRE(klein_mul(Klein::a, Klein::b) == Klein::c);
    REQUIRE(klein_mul(Klein::b, Klein::c) == Klein::a);
    REQUIRE(klein_mul(Klein::c, Klein::a) == Klein::b);
    for (Klein g : kAllLabels) {
      REQUIRE(klein_mul(g, g) == Klein::e);
      REQUIRE(klein_mul(Klein::e, g) == g);
      for (Klein h : kAllLabels)
        for (Klein k : kAllLabels)
          REQUIRE(klein_mul(klein_mul(g, h), k) == klein_mul(g, klein_mul(h, k)));
    }
  }
  SECTION("characters are homomorphisms, orthogonal, and separate labels") {
    for (Klein g : kAllLabels) {
      REQUIRE(klein_chi(g, Klein::e) == 1);
      REQUIRE(klein_chi(Klein::e, g) == 1);
      for (Klein s : kAllLabels)
        for (Klein t : kAllLabels)
          REQUIRE(klein_chi(g, klein_mul(s, t)) ==
                  klein_chi(g, s) * klein_chi(g, t));
    }
    for (Klein g : kAllLabels)
      for (Klein h : kAllLabels) {
        int dot = 0;
        for (Klein s : kAllLabels) dot += klein_chi(g, s) * klein_chi(h, s);
        REQUIRE(dot == (g == h ? 4 : 0));
      }
  }
  SECTION("names round-trip") {
    for (Klein g : kAllLabels) REQUIRE(klein_from_name(klein_name(g)) == g);
    REQUIRE_THROWS_AS(klein_from_name("d"), std::invalid_argument);
  }
}

TEST_CASE("bracket and Kronecker product identities") {
  RatGen gen(23);
  SECTION("bracket is antisymmetric and bilinear") {
    for (int t = 0; t < 10; ++t) {
      Mat A = random_antisymmetric(4, gen);
      Mat B = random_antisymmetric(4, gen);
      REQUIRE(bracket(A, B) == -bracket(B, A));
      Rational s = gen.next();
      REQUIRE(bracket(A * s, B) == bracket(A, B) * s);
    }
  }
  SECTION("Jacobi identity holds on full so(N) bases") {
    for (int N : {4, 6}) {
      LieBasis basis = so_basis(N);
      int n = basis.dim();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            const Mat& X = basis.elements[i];
            const Mat& Y = basis.elements[j];
            const Mat& Z = basis.elements[k];
            Mat sum = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) +
                      bracket(Z, bracket(X, Y));
            REQUIRE(sum.is_zero());
          }
    }
  }
  SECTION("Kronecker mixed product") {
    auto rnd = [&](int r, int c) {
      Mat m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = gen.next();
      return m;
    };
    Mat A = rnd(2, 2), B = rnd(3, 3), C = rnd(2, 2), D = rnd(3, 3);
    REQUIRE(kron(A, B) * kron(C, D) == kron(A * C, B * D));
  }
}

TEST_CASE("exact linear algebra kernels") {
  SECTION("rank and nullspace of a known system") {
    // rows: (1,2,3,4), (2,4,6,8), (0,0,1,1) -> rank 2, nullity 2
    Mat A = Mat::from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}});
    REQUIRE(rank(A) == 2);
    auto ns = nullspace(A);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
      for (int i = 0; i < A.rows(); ++i) {
        Rational dot = 0;
        for (int j = 0; j < A.cols(); ++j) dot += A.at(i, j) * v[j];
        REQUIRE(dot == 0);
      }
    }
  }
  SECTION("solve_linear reports consistency faithfully") {
    Mat A = Mat::from_rows({{1, 1}, {1, -1}});
    LinearSolution sol = solve_linear(A, {rat(3), rat(1)});
    REQUIRE(sol.consistent);
    REQUIRE(sol.particular == std::vector<Rational>{rat(2), rat(1)});
    REQUIRE(sol.null_basis.empty());

    Mat B = Mat::from_rows({{1, 1}, {2, 2}});
    REQUIRE_FALSE(solve_linear(B, {rat(1), rat(3)}).consistent);
    LinearSolution under = solve_linear(B, {rat(1), rat(2)});
    REQUIRE(under.consistent);
    REQUIRE(under.null_basis.size() == 1);
  }
  SECTION("inverse: exact when nonsingular, nullopt otherwise") {
    Mat A = Mat::from_rows({{2, 1, 0}, {1, 1, 1}, {0, 1, 3}});
    auto inv = inverse(A);
    REQUIRE(inv.has_value());
    REQUIRE(*inv * A == Mat::identity(3));
    REQUIRE(A * *inv == Mat::identity(3));
    REQUIRE_FALSE(inverse(Mat::from_rows({{1, 2}, {2, 4}})).has_value());
  }
}

TEST_CASE("inertia is exact and congruence-invariant") {
  SECTION("fixtures") {
    REQUIRE(inertia(Mat::from_rows({{2, 0, 0}, {0, -3, 0}, {0, 0, 0}})) ==
            Inertia{1, 1, 1});
    // zero diagonal forces the off-diagonal congruence step
    REQUIRE(inertia(Mat::from_rows({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
    REQUIRE(inertia(Mat::zero(3, 3)) == Inertia{0, 0, 3});
  }
  SECTION("Sylvester invariance under congruence") {
    RatGen gen(31);
    for (int trial = 0; trial < 8; ++trial) {
      Mat S(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          S.at(i, j) = gen.next();
          S.at(j, i) = S.at(i, j);
        }
      Mat P(4, 4);
      do {
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) P.at(i, j) = gen.next();
      } while (!inverse(P).has_value());
      REQUIRE(inertia(P.transpose() * S * P) == inertia(S));
    }
  }
}

TEST_CASE("characteristic polynomial and synthetic division") {
  Mat A = Mat::from_rows({{0, 1}, {-2, 3}});  // eigenvalues 1 and 2
  auto poly = char_poly(A);
  REQUIRE(poly == std::vector<Rational>{rat(1), rat(-3), rat(2)});

  auto [q1, r1] = divide_by_root(poly, rat(1));
  REQUIRE(r1 == 0);
  REQUIRE(q1 == std::vector<Rational>{rat(1), rat(-2)});
  auto [q2, r2] = divide_by_root(q1, rat(2));
  REQUIRE(r2 == 0);
  REQUIRE(q2 == std::vector<Rational>{rat(1)});

  auto [q3, r3] = divide_by_root(poly, rat(5));
  REQUIRE(r3 != 0);
  (void)q3;

  SECTION("float cross-check agrees with exact roots") {
    Mat S = Mat::from_rows({{2, 1}, {1, 2}});  // eigenvalues 1 and 3
    auto eig = jacobi_eigenvalues(S);
    REQUIRE(eig.size() == 2);
    REQUIRE(std::abs(eig[0] - 1.0) < 1e-9);
    REQUIRE(std::abs(eig[1] - 3.0) < 1e-9);
  }
}

TEST_CASE("so(N) basis and Killing form") {
  SECTION("basis shape") {
    LieBasis basis = so_basis(4);
    REQUIRE(basis.dim() == 6);
    REQUIRE(basis.labels.front() == "E01");
    REQUIRE(basis.labels.back() == "E23");
    for (const Mat& m : basis.elements) REQUIRE(m.is_antisymmetric());
    REQUIRE_THROWS_AS(so_basis(1), std::invalid_argument);
  }
  SECTION("closed form equals the ad-trace definition") {
    for (int N : {4, 8}) {
      LieBasis basis = so_basis(N);
      for (int i = 0; i < basis.dim(); ++i)
        for (int j = i; j < basis.dim(); ++j) {
          Rational lhs = killing_form(basis.elements[i], basis.elements[j]);
          Rational rhs =
              test::killing_via_ad(basis, basis.elements[i], basis.elements[j]);
          REQUIRE(lhs == rhs);
        }
    }
    // N = 12 is too large for the full pairwise sweep; sample it
    LieBasis big = so_basis(12);
    std::mt19937_64 idx(47);
    for (int i = 0; i < big.dim(); ++i)
      REQUIRE(killing_form(big.elements[i], big.elements[i]) ==
              test::killing_via_ad(big, big.elements[i], big.elements[i]));
    for (int t = 0; t < 60; ++t) {
      int i = int(idx() % big.dim());
      int j = int(idx() % big.dim());
      REQUIRE(killing_form(big.elements[i], big.elements[j]) ==
              test::killing_via_ad(big, big.elements[i], big.elements[j]));
    }
  }
  SECTION("domain guards") {
    Mat sym = Mat::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    Mat anti = so_basis(3).elements[0];
    REQUIRE_THROWS_AS(killing_form(sym, anti), std::invalid_argument);
  }
}

TEST_CASE("structure constants reproduce brackets and police closure") {
  LieBasis basis = so_basis(4);
  auto c = structure_constants(basis);
  for (int i = 0; i < basis.dim(); ++i)
    for (int j = 0; j < basis.dim(); ++j) {
      Mat rebuilt(4, 4);
      for (int t = 0; t < basis.dim(); ++t)
        rebuilt = rebuilt + basis.elements[t] * c[i][j][t];
      REQUIRE(rebuilt == bracket(basis.elements[i], basis.elements[j]));
    }

  SECTION("a non-closed subset is rejected with the offending pair") {
    LieBasis open_set;
    open_set.ambient_size = 4;
    open_set.elements = {basis.elements[0], basis.elements[3]};  // E01, E12
    open_set.labels = {basis.labels[0], basis.labels[3]};
    REQUIRE_THROWS_WITH(structure_constants(open_set),
                        Catch::Matchers::ContainsSubstring("(0, 1)"));
  }

  SECTION("coordinates_in distinguishes members from outsiders") {
    Mat m = basis.elements[0] * rat(2) - basis.elements[5] * rat(3);
    auto coords = coordinates_in(basis, m);
    REQUIRE(coords.has_value());
    REQUIRE((*coords)[0] == 2);
    REQUIRE((*coords)[5] == -3);
    LieBasis first_only{4, {basis.elements[0]}, {basis.labels[0]}};
    REQUIRE_FALSE(coordinates_in(first_only, basis.elements[1]).has_value());
  }
}
