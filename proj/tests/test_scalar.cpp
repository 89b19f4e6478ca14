#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cforge/delta.hpp"
#include "cforge/linalg.hpp"
#include "cforge/scalar.hpp"

using namespace cforge;

namespace {

Scalar q(long num, long den) { return Scalar::rational(num, den); }

Scalar random_scalar(std::mt19937_64& rng) {
  auto small = [&rng]() {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 9);
    return mpq_class(num, den);
  };
  Scalar s(small(), small());
  return s;
}

}  // namespace

TEST_CASE("scalar arithmetic matches hand values") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK((Scalar(1) + Scalar::i()) / (Scalar(1) - Scalar::i()) == Scalar::i());
  CHECK((q(1, 2) - q(1, 2)).is_zero());
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK_THROWS_AS(Scalar::rational(1, 0), std::domain_error);
}

TEST_CASE("scalar field axioms hold exactly on random values") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 200; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    if (!a.is_zero()) CHECK(a * inverse(a) == Scalar(1));
  }
}

TEST_CASE("scalar text syntax parses and round-trips") {
  CHECK(parse_scalar("5/6") == q(5, 6));
  CHECK(parse_scalar("-1/3+2i") == Scalar(mpq_class(-1, 3), mpq_class(2)));
  CHECK(parse_scalar("\xE2\x88\x92" "1/3+2i") == Scalar(mpq_class(-1, 3), mpq_class(2)));
  CHECK(parse_scalar("i") == Scalar::i());
  CHECK(parse_scalar("-i") == -Scalar::i());
  CHECK(parse_scalar(" 1/2 - 2/3 i ") == Scalar(mpq_class(1, 2), mpq_class(-2, 3)));
  CHECK(parse_scalar("0") == Scalar(0));
  CHECK(parse_scalar("2i") == Scalar(mpq_class(0), mpq_class(2)));
  CHECK(parse_scalar("3") == Scalar(3));
  CHECK_THROWS_AS(parse_scalar("1+2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("i+i"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);

  std::mt19937_64 rng(777);
  for (int t = 0; t < 200; ++t) {
    Scalar s = random_scalar(rng);
    CHECK(parse_scalar(to_string(s)) == s);
  }
  CHECK(to_string(Scalar(0)) == "0");
  CHECK(to_string(Scalar::i()) == "i");
  CHECK(to_string(-Scalar::i()) == "-i");
  CHECK(to_string(q(-1, 3) + Scalar(2) * Scalar::i()) == "-1/3+2i");
}

TEST_CASE("falling factorial and binomials") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(-1, 2) == 2);
  CHECK(falling_factorial(3, 0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(2, 3) == 0);
}

TEST_CASE("delta group evaluation") {
  DeltaGroup z1({Scalar(1)});
  CHECK(z1.eval(DeltaVector{{3}}) == Scalar(3));
  DeltaGroup gauss({Scalar(1), Scalar::i()});
  CHECK(gauss.eval(DeltaVector{{2, 3}}) == Scalar(mpq_class(2), mpq_class(3)));
  DeltaGroup thirds({q(1, 3)});
  CHECK(thirds.eval(DeltaVector{{-2}}) == q(-2, 3));
  CHECK_THROWS_AS(z1.eval(DeltaVector{{1, 2}}), std::invalid_argument);
}

TEST_CASE("delta group membership") {
  DeltaGroup z1({Scalar(1)});
  CHECK(z1.membership(Scalar(1)) == DeltaVector{{1}});
  CHECK(!z1.membership(q(2, 3)).has_value());  // 2b with b=1/3 stays outside Z
  DeltaGroup gauss({Scalar(1), Scalar::i()});
  CHECK(gauss.membership(Scalar(mpq_class(-2), mpq_class(5))) == DeltaVector{{-2, 5}});
  CHECK(!gauss.membership(q(1, 2)).has_value());
}

TEST_CASE("delta membership round-trips eval") {
  std::mt19937_64 rng(31337);
  std::vector<DeltaGroup> groups;
  groups.emplace_back(std::vector<Scalar>{Scalar(1)});
  groups.emplace_back(std::vector<Scalar>{q(1, 3)});
  groups.emplace_back(std::vector<Scalar>{Scalar(1), Scalar::i()});
  groups.emplace_back(std::vector<Scalar>{Scalar(mpq_class(1, 2), mpq_class(1, 3)), q(1, 5)});
  for (const auto& g : groups) {
    for (int t = 0; t < 50; ++t) {
      DeltaVector v;
      for (size_t k = 0; k < g.rank(); ++k)
        v.coords.push_back(static_cast<long long>(rng() % 21) - 10);
      auto back = g.membership(g.eval(v));
      REQUIRE(back.has_value());
      CHECK(*back == v);
    }
  }
}

TEST_CASE("dependent generators are rejected") {
  CHECK_THROWS_AS(DeltaGroup({Scalar(1), Scalar(2)}), std::invalid_argument);
  CHECK_THROWS_AS(DeltaGroup({Scalar(1), Scalar::i(), Scalar(1) + Scalar::i()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DeltaGroup({Scalar(0)}), std::invalid_argument);
}

TEST_CASE("solve_linear examples") {
  ScalarMat rows = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
  auto sol = solve_linear(rows, {Scalar(5), Scalar(7)});
  REQUIRE(sol.has_value());
  CHECK(*sol == ScalarVec{Scalar(5), Scalar(7)});

  CHECK(!solve_linear({{Scalar(1), Scalar(1)}}, {Scalar(1), Scalar(0)}).has_value());

  ScalarMat dep = {{Scalar(2), Scalar(4)}, {Scalar(1), Scalar(2)}};
  ScalarMat rref = row_reduce(dep);
  REQUIRE(rref.size() == 1);
  CHECK(rref[0] == ScalarVec{Scalar(1), Scalar(2)});
}

TEST_CASE("row_reduce is idempotent and preserves the row span") {
  std::mt19937_64 rng(999);
  for (int t = 0; t < 40; ++t) {
    size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
    ScalarMat rows(m, ScalarVec(n));
    for (auto& r : rows)
      for (auto& c : r) c = Scalar(static_cast<long>(rng() % 7) - 3);
    ScalarMat rref = row_reduce(rows);
    CHECK(row_reduce(rref) == rref);
    // Each original row lies in the span of the reduced basis and vice versa.
    for (const auto& r : rows) CHECK(solve_linear(rref, r).has_value());
    for (const auto& r : rref) CHECK(solve_linear(rows, r).has_value());
  }
}

TEST_CASE("nullspace kernels") {
  // x + y = 0 has the line (1, -1).
  ScalarMat k = nullspace({{Scalar(1), Scalar(1)}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] * Scalar(1) + k[0][1] * Scalar(1) == Scalar(0));
  // Identity has trivial kernel.
  CHECK(nullspace({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}).empty());
  // Zero map has everything.
  CHECK(nullspace({{Scalar(0), Scalar(0)}}).size() == 2);
}

TEST_CASE("span builder tracks membership incrementally") {
  SpanBuilder span(3);
  CHECK(span.add({Scalar(1), Scalar(2), Scalar(0)}));
  CHECK(span.add({Scalar(0), Scalar(0), Scalar(3)}));
  CHECK(!span.add({Scalar(2), Scalar(4), Scalar(3)}));
  CHECK(span.dim() == 2);
  CHECK(span.contains({Scalar(1), Scalar(2), Scalar(1)}));
  CHECK(!span.contains({Scalar(1), Scalar(0), Scalar(0)}));
}
