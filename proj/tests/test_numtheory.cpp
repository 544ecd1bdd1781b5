#include "storic/numtheory.hpp"

#include <doctest.h>

#include <random>

using namespace storic;

TEST_CASE("ext_gcd identity") {
  auto check = [](long long a, long long b, long long g) {
    ExtGcd e = ext_gcd(Int(a), Int(b));
    CHECK(e.g == g);
    CHECK(Int(a) * e.x + Int(b) * e.y == e.g);
  };
  check(1, 1, 1);
  check(2, 3, 1);
  check(6, 4, 2);
  check(-6, 4, 2);
  check(0, 5, 5);
  CHECK_THROWS_AS(ext_gcd(Int(0), Int(0)), std::domain_error);
}

TEST_CASE("solve_gh") {
  GHCert c = solve_gh(Int(2), 1, Int(1), Int(1));
  CHECK(c.g == 1);
  CHECK(c.h == 1);

  c = solve_gh(Int(3), 1, Int(2), Int(1));
  CHECK(c.g == 1);
  CHECK(c.h == 1);

  CHECK_THROWS_AS(solve_gh(Int(2), 1, Int(3), Int(2)), ConditionIIIFailure);

  // lexicographic minimality against exhaustive search
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    Int p = std::vector<int>{2, 3, 5}[rng() % 3];
    unsigned l = 1 + rng() % 3;
    Int a = 1 + rng() % 6, d = 1 + rng() % 6;
    if (ext_gcd(a, d).g != 1) continue;
    Int P = pow_int(p, l);
    Int best_g = 0;
    for (Int g = 1; a * g + d <= P; ++g)
      if ((P - a * g) % d == 0) {
        best_g = g;
        break;
      }
    if (best_g == 0) {
      CHECK_THROWS_AS(solve_gh(p, l, a, d), ConditionIIIFailure);
    } else {
      GHCert gc = solve_gh(p, l, a, d);
      CHECK(gc.g == best_g);
      CHECK(a * gc.g + d * gc.h == P);
      CHECK(gc.h >= 1);
    }
  }
}

TEST_CASE("solve_gij golden and invariants") {
  GijCert c = solve_gij(Int(1), Int(1), Int(3), 1);
  CHECK(c.g_ij == 1);
  CHECK(c.g_ji == 2);
  CHECK(c.r == 1);
  CHECK(c.m == 1);

  c = solve_gij(Int(1), Int(1), Int(2), 1);
  CHECK(c.g_ij == 1);
  CHECK(c.g_ji == 1);
  CHECK(c.r == 1);
  CHECK(c.m == 1);

  std::mt19937_64 rng(11);
  const int primes[4] = {2, 3, 5, 7};
  int done = 0;
  while (done < 100) {
    Int p = primes[rng() % 4];
    Int ci = 1 + rng() % 50, cj = 1 + rng() % 50;
    unsigned l = 1 + rng() % 3;
    if (ci % p == 0 || cj % p == 0) continue;
    ++done;
    GijCert g = solve_gij(ci, cj, p, l);
    Int P = pow_int(p, g.m.convert_to<unsigned>());
    CHECK(ci * g.g_ij + cj * g.g_ji == g.r * P);
    CHECK(g.g_ij % p != 0);
    CHECK(g.g_ji % p != 0);
    CHECK(g.g_ij >= 1);
    CHECK(g.g_ji >= 1);
    CHECK(g.r >= 1);
    CHECK(g.m >= l);
  }
}

TEST_CASE("solve_hk golden and invariants") {
  HiCert c = solve_hk(Int(1), Int(2), Int(1), Int(3), 1);
  CHECK(c.h == 1);
  CHECK(c.k == 2);
  CHECK(c.r == 1);
  CHECK(c.m == 1);
  CHECK(c.s == 1);
  CHECK(c.t == 0);

  c = solve_hk(Int(1), Int(1), Int(1), Int(2), 1);
  CHECK(c.h == 1);
  CHECK(c.k == 1);
  CHECK(c.r == 1);
  CHECK(c.m == 1);
  CHECK(c.s * 1 + c.t * 1 == 1);

  c = solve_hk(Int(3), Int(2), Int(1), Int(2), 2);
  CHECK(c.h % 2 != 0);
  CHECK(c.k % 2 != 0);
  CHECK(c.m >= 2);
  CHECK(Int(3) * c.h + c.k == c.r * pow_int(Int(2), c.m.convert_to<unsigned>()));

  std::mt19937_64 rng(13);
  const int primes[4] = {2, 3, 5, 7};
  int done = 0;
  while (done < 100) {
    Int p = primes[rng() % 4];
    Int ci = 1 + rng() % 30, a = 1 + rng() % 6, d = 1 + rng() % 6;
    unsigned l = 1 + rng() % 3;
    if (ci % p == 0 || ext_gcd(a, d).g != 1) continue;
    ++done;
    HiCert h = solve_hk(ci, a, d, p, l);
    Int P = pow_int(p, h.m.convert_to<unsigned>());
    CHECK(ci * h.h + h.k == h.r * P);
    CHECK(h.h % p != 0);
    CHECK(h.k % p != 0);
    CHECK(h.m >= l);
    CHECK(a * h.s + d * h.t == h.k);
    CHECK(h.s >= 0);
    CHECK(h.t >= 0);
  }
}

TEST_CASE("solve_dij") {
  DijCert c = solve_dij(Int(1), Int(1));
  CHECK(Int(1) * c.d_ij - Int(1) * c.d_ji == 1);

  c = solve_dij(Int(2), Int(3));
  CHECK(Int(2) * c.d_ij - Int(3) * c.d_ji == 1);

  c = solve_dij(Int(4), Int(6));
  CHECK(Int(4) * c.d_ij - Int(6) * c.d_ji == 2);

  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    Int ci = 1 + rng() % 100, cj = 1 + rng() % 100;
    DijCert d = solve_dij(ci, cj);
    CHECK(ci * d.d_ij - cj * d.d_ji == ext_gcd(ci, cj).g);
  }
}

TEST_CASE("p_adic_val") {
  CHECK(p_adic_val(Int(7), Int(2)) == 0);
  CHECK(p_adic_val(Int(8), Int(2)) == 3);
  CHECK(p_adic_val(Int(12), Int(2)) == 2);
  CHECK_THROWS_AS(p_adic_val(Int(0), Int(2)), std::domain_error);
}

TEST_CASE("determinism") {
  for (int it = 0; it < 3; ++it) {
    GHCert c = solve_gh(Int(5), 2, Int(3), Int(4));
    CHECK(Int(3) * c.g + Int(4) * c.h == 25);
    GHCert c2 = solve_gh(Int(5), 2, Int(3), Int(4));
    CHECK(c.g == c2.g);
    CHECK(c.h == c2.h);
  }
}
