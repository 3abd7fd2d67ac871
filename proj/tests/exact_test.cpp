#include "knotsig/exact.hpp"

#include <doctest.h>

#include <random>

using knotsig::binomial;
using knotsig::decimal_render;
using knotsig::ExactInt;
using knotsig::ExactRational;

TEST_CASE("binomial small values and conventions") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(-5, -5) == 0);
  CHECK(binomial(64, 32) == ExactInt("1832624140942590534"));
}

TEST_CASE("binomial satisfies the Pascal recurrence with the vanishing convention") {
  for (long long n = 1; n <= 64; ++n)
    for (long long k = -2; k <= n + 2; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial symmetry") {
  for (long long n = 0; n <= 64; ++n)
    for (long long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("decimal_render reproduces reference digit strings") {
  CHECK(decimal_render(ExactRational(24, 7), 9) == "3.428571429");
  CHECK(decimal_render(ExactRational(456, 85), 9) == "5.364705882");
  CHECK(decimal_render(ExactRational(8, 5), 9) == "1.600000000");
}

TEST_CASE("decimal_render corner cases") {
  CHECK(decimal_render(ExactRational(1, 2), 0) == "1");    // half away from zero
  CHECK(decimal_render(ExactRational(-1, 2), 0) == "-1");
  CHECK(decimal_render(ExactRational(5, 4), 1) == "1.3");
  CHECK(decimal_render(ExactRational(-5, 4), 1) == "-1.3");
  CHECK(decimal_render(ExactRational(1, 8), 2) == "0.13");
  CHECK(decimal_render(ExactRational(-24, 7), 2) == "-3.43");
  CHECK(decimal_render(ExactRational(22, 7), 0) == "3");
  CHECK(decimal_render(ExactRational(5), 3) == "5.000");
  CHECK(decimal_render(ExactRational(0), 4) == "0.0000");
  CHECK(decimal_render(ExactRational(-1, 100000), 3) == "0.000");  // rounds to zero, no sign
  CHECK(decimal_render(ExactRational(999, 1000), 2) == "1.00");    // carry across the point
}

namespace {

// Parse "d+.d*" back into an exact rational.
ExactRational parse_decimal(const std::string& s, unsigned places) {
  std::string digits = s;
  bool negative = false;
  if (!digits.empty() && digits[0] == '-') {
    negative = true;
    digits.erase(0, 1);
  }
  const auto dot = digits.find('.');
  if (dot != std::string::npos) digits.erase(dot, 1);
  ExactInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  ExactRational value = ExactRational(ExactInt(digits)) / ExactRational(scale);
  return negative ? -value : value;
}

}  // namespace

TEST_CASE("decimal_render round-trips within half an ulp of the last place") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long long> den(1, 100'000);
  std::uniform_int_distribution<unsigned> places(0, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    const ExactRational q(num(rng), den(rng));
    const unsigned p = places(rng);
    const std::string rendered = decimal_render(q, p);
    const ExactRational back = parse_decimal(rendered, p);
    ExactRational err = back - q;
    if (err < 0) err = -err;
    ExactInt scale = 2;
    for (unsigned i = 0; i < p; ++i) scale *= 10;
    CHECK(err <= ExactRational(1, scale));
  }
}

TEST_CASE("integer arithmetic is exact at large magnitudes") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    ExactInt a = 1, b = 1;
    for (int limb = 0; limb < 4; ++limb) {
      a = (a << 64) + rng();
      b = (b << 64) + rng();
    }
    if (trial % 2) b = -b;
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
  }
}

TEST_CASE("rational field axioms hold exactly") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  auto draw = [&] { return ExactRational(num(rng), den(rng)); };
  for (int trial = 0; trial < 500; ++trial) {
    const ExactRational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
    if (b != 0) CHECK((a / b) * b == a);
  }
  CHECK(ExactRational(2, 4) == ExactRational(1, 2));
  CHECK(ExactRational(-6, 8) == ExactRational(-3, 4));
}
