#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "definetti/exact.hpp"
#include "reference.hpp"

using namespace definetti;

TEST_CASE("factorial and binomial match a naive product") {
  for (long n = 0; n <= 40; ++n) {
    CHECK(factorial(static_cast<unsigned long>(n)) == ref::fact(n));
    for (long k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == ref::choose(n, k));
  }
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("factorial table is safe under concurrent growth") {
  std::vector<std::thread> pool;
  std::vector<mpz_class> results(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = factorial(300 + 10 * t); });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) CHECK(results[static_cast<std::size_t>(t)] == ref::fact(300 + 10 * t));
}

TEST_CASE("perfect squares and rational powers") {
  BigRational root;
  CHECK(is_perfect_square(ref::q("9/4"), &root));
  CHECK(root == ref::q("3/2"));
  CHECK_FALSE(is_perfect_square(ref::q("1/2")));
  CHECK_FALSE(is_perfect_square(ref::q("-4")));
  CHECK(pow(ref::q("2/3"), 3) == ref::q("8/27"));
  CHECK(pow(ref::q("5/7"), 0) == 1);
}

TEST_CASE("ExactReal arithmetic stays exact for commensurable surds") {
  const ExactReal half = ExactReal::sqrt(ref::q("1/2"));
  CHECK(half.to_string() == "sqrt(1/2)");
  CHECK((-half).to_string() == "-sqrt(1/2)");
  CHECK((half + half) == ExactReal::sqrt(2));
  CHECK((half - half).is_zero());
  CHECK((half * half) == ExactReal::rational(ref::q("1/2")));
  CHECK((ExactReal::sqrt(8) + (-ExactReal::sqrt(2))) == ExactReal::sqrt(2));
  CHECK((ExactReal::sqrt(2) - ExactReal::sqrt(8)) == -ExactReal::sqrt(2));
  CHECK(ExactReal::rational(ref::q("-3/4")).to_string() == "-3/4");
  CHECK(half.to_double() == doctest::Approx(0.7071067811865476).epsilon(1e-15));
  CHECK_THROWS_AS(ExactReal::sqrt(2) + ExactReal::sqrt(3), std::domain_error);
  CHECK_THROWS_AS(ExactReal::sqrt(-1), std::domain_error);
  CHECK_THROWS_AS(ExactReal::sqrt(2) / ExactReal(), std::domain_error);
}

TEST_CASE("decimal rendering: 12 significant digits, half-even, trimmed") {
  CHECK(render_decimal(ref::q(200, 401)) == "0.498753117207");
  CHECK(render_decimal(ref::q("4/5")) == "0.8");
  CHECK(render_decimal(BigRational(0)) == "0");
  CHECK(render_decimal(BigRational(1)) == "1");
  CHECK(render_decimal(ref::q("-1/3")) == "-0.333333333333");
  CHECK(render_decimal(ref::q("2/3")) == "0.666666666667");
  // ties go to the even digit
  CHECK(render_decimal(ref::q("125/1000"), 2) == "0.12");
  CHECK(render_decimal(ref::q("135/1000"), 2) == "0.14");
  CHECK(render_decimal(ref::q("995/1000"), 2) == "1");
  CHECK(render_decimal(ref::q("1/100000")) == "0.00001");
  CHECK(render_decimal(ref::q("1/1000000")) == "1e-06");
  CHECK(render_decimal(ref::q("3/2") / 1000000000000) == "1.5e-12");
  CHECK(render_decimal(BigRational(123456789012345)) == "1.23456789012e+14");
  CHECK(render_decimal(0.25) == "0.25");
  CHECK(render_decimal(0.1) == "0.1");
  CHECK_THROWS_AS(render_decimal(BigRational(1), 0), std::invalid_argument);
}

TEST_CASE("rational rendering and parsing round-trip") {
  CHECK(render_rational(ref::q("6/4")) == "3/2");
  CHECK(render_rational(BigRational(7)) == "7");
  CHECK(parse_rational("3/4") == ref::q("3/4"));
  CHECK(parse_rational("-6/8") == ref::q("-3/4"));
  CHECK(parse_rational("0.125") == ref::q("1/8"));
  CHECK(parse_rational("1.5e-3") == ref::q("3/2000"));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("0.08") == ref::q("2/25"));
  CHECK(parse_rational("+010/4") == ref::q("5/2"));
  CHECK(parse_rational(".5") == ref::q("1/2"));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
