#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>

#include "turanforge/bitset.hpp"
#include "turanforge/errors.hpp"
#include "turanforge/parallel.hpp"
#include "turanforge/rational.hpp"
#include "turanforge/rng.hpp"

using namespace turanforge;

TEST_CASE("rationals parse exactly and print as p/q") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("0.05") == Rational(1, 20));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(Rational(2, 6)) == "1/3");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(Rational(1)) == "1/1");
  CHECK_THROWS_AS(parse_rational("abc"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
  CHECK(to_double(Rational(1, 4)) == doctest::Approx(0.25));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(50, 5) == 2118760);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("splitmix64 matches the reference stream") {
  SplitMix64 sm(0);
  CHECK(sm.next() == 0xe220a8397b1dcdafULL);
  CHECK(sm.next() == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("rng is deterministic and bounded draws stay in range") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CHECK(Rng(42).next() != c.next());
  Rng r(7);
  std::vector<int> hist(6, 0);
  for (int i = 0; i < 60000; ++i) {
    const auto v = r.below(6);
    REQUIRE(v < 6);
    ++hist[v];
  }
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.unit();
    CHECK((u >= 0.0 && u < 1.0));
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("shuffle permutes") {
  std::vector<int> v(20);
  std::iota(v.begin(), v.end(), 0);
  Rng r(3);
  auto w = v;
  turanforge::shuffle(w.begin(), w.end(), r);
  CHECK(w != v);
  std::sort(w.begin(), w.end());
  CHECK(w == v);
}

TEST_CASE("bitset operations") {
  Bitset a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(100);
  CHECK(a.count() == 3);
  CHECK(intersect_count(a, b) == 1);
  CHECK(difference_count(a, b) == 2);
  CHECK(intersects(a, b));
  CHECK(a.first() == 0);
  CHECK(a.next(1) == 64);
  CHECK(a.next(130) == 130);
  CHECK(a.to_indices() == std::vector<int>{0, 64, 129});
  Bitset c = a;
  c &= b;
  CHECK(c.to_indices() == std::vector<int>{64});
  Bitset f = Bitset::full(70);
  CHECK(f.count() == 70);
  BitMatrix m(3, 70);
  m.set(2, 69);
  CHECK(m.test(2, 69));
  CHECK(m.row(2).count() == 1);
  CHECK(m.count() == 1);
}

TEST_CASE("parallel helpers are deterministic") {
  std::vector<int> out(1000, 0);
  parallel_for(out.size(), 4, [&](std::size_t i) { out[i] = static_cast<int>(i * i % 7); });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i % 7));
  for (unsigned t : {1u, 2u, 8u}) {
    const auto hit = parallel_find_first(500, t, [](std::size_t i) { return i % 37 == 36 || i == 400; });
    REQUIRE(hit);
    CHECK(*hit == 36);
  }
  CHECK_FALSE(parallel_find_first(10, 3, [](std::size_t) { return false; }));
}

TEST_CASE("thread count falls back to the environment") {
  CHECK(resolve_threads(3) == 3);
  setenv("TURANFORGE_THREADS", "5", 1);
  CHECK(resolve_threads(0) == 5);
  unsetenv("TURANFORGE_THREADS");
  CHECK(resolve_threads(0) == 1);
}
