#include "definetti/exact.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <mutex>
#include <regex>
#include <shared_mutex>
#include <stdexcept>

namespace definetti {

namespace {

class FactorialTable {
 public:
  const BigInt& get(unsigned long n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    // std::deque keeps references to existing elements valid on push_back.
    while (table_.size() <= n) {
      const auto k = table_.size();
      table_.push_back(table_.back() * static_cast<unsigned long>(k));
    }
    return table_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<BigInt> table_{BigInt(1)};
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

BigRational pow10_signed(long e) {
  if (e >= 0) return BigRational(pow10(static_cast<unsigned long>(e)));
  BigRational r(BigInt(1), pow10(static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

BigRational canonical(BigRational q) {
  q.canonicalize();
  return q;
}

std::string strip_trailing_zeros(std::string s) {
  while (!s.empty() && s.back() == '0') s.pop_back();
  return s;
}

}  // namespace

const BigInt& factorial(unsigned long n) { return factorial_table().get(n); }

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigRational pow(const BigRational& base, unsigned long exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return canonical(BigRational(num, den));
}

bool is_perfect_square(const BigRational& q, BigRational* root) {
  if (sgn(q) < 0) return false;
  BigRational c = canonical(q);
  if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t())) {
    return false;
  }
  if (root != nullptr) {
    BigInt num;
    BigInt den;
    mpz_sqrt(num.get_mpz_t(), c.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), c.get_den_mpz_t());
    *root = canonical(BigRational(num, den));
  }
  return true;
}

ExactReal ExactReal::signed_sqrt(int sign, BigRational radicand) {
  radicand.canonicalize();
  if (sgn(radicand) < 0) throw std::domain_error("ExactReal: negative radicand");
  ExactReal r;
  if (sign == 0 || sgn(radicand) == 0) return r;
  r.sign_ = sign > 0 ? 1 : -1;
  r.radicand_ = std::move(radicand);
  return r;
}

ExactReal ExactReal::rational(const BigRational& value) {
  return signed_sqrt(sgn(value), canonical(value * value));
}

double ExactReal::to_double() const {
  if (sign_ == 0) return 0.0;
  mpf_class f(radicand_, 256);
  mpf_class root(0, 256);
  mpf_sqrt(root.get_mpf_t(), f.get_mpf_t());
  return sign_ * root.get_d();
}

std::string ExactReal::to_string() const {
  if (sign_ == 0) return "0";
  BigRational root;
  if (is_perfect_square(radicand_, &root)) {
    return (sign_ < 0 ? "-" : "") + render_rational(root);
  }
  return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + render_rational(radicand_) + ")";
}

ExactReal ExactReal::operator-() const {
  ExactReal r = *this;
  r.sign_ = -r.sign_;
  return r;
}

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  return ExactReal::signed_sqrt(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
}

ExactReal operator/(const ExactReal& a, const ExactReal& b) {
  if (b.sign_ == 0) throw std::domain_error("ExactReal: division by zero");
  return ExactReal::signed_sqrt(a.sign_ * b.sign_, a.radicand_ / b.radicand_);
}

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigRational cross;
  if (!is_perfect_square(a.radicand_ * b.radicand_, &cross)) {
    throw std::domain_error("ExactReal: sum of incommensurable square roots " + a.to_string() +
                            " + " + b.to_string());
  }
  // (sa*sqrt(A) + sb*sqrt(B))^2 = A + B + 2*sa*sb*sqrt(AB)
  BigRational sq = a.radicand_ + b.radicand_ + 2 * a.sign_ * b.sign_ * cross;
  int sign = 0;
  if (a.sign_ == b.sign_) {
    sign = a.sign_;
  } else if (a.radicand_ > b.radicand_) {
    sign = a.sign_;
  } else if (a.radicand_ < b.radicand_) {
    sign = b.sign_;
  }
  return ExactReal::signed_sqrt(sign, std::move(sq));
}

std::string render_rational(const BigRational& q) {
  BigRational c = canonical(q);
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string render_decimal(const BigRational& q, int significant) {
  if (significant < 1) throw std::invalid_argument("render_decimal: need >= 1 digit");
  BigRational a = canonical(q);
  if (sgn(a) == 0) return "0";
  const bool negative = sgn(a) < 0;
  if (negative) a = -a;

  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  while (a < pow10_signed(e)) --e;
  while (a >= pow10_signed(e + 1)) ++e;

  // scaled has integer part with `significant` digits
  BigRational scaled = canonical(a * pow10_signed(significant - 1 - e));
  BigInt digits;
  mpz_fdiv_q(digits.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const BigRational rem = scaled - BigRational(digits);
  const int cmp_half = cmp(2 * rem, BigRational(1));
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(digits.get_mpz_t()))) digits += 1;
  if (digits == pow10(static_cast<unsigned long>(significant))) {
    digits = pow10(static_cast<unsigned long>(significant - 1));
    ++e;
  }

  const std::string ds = digits.get_str();
  std::string out = negative ? "-" : "";
  if (e >= -5 && e < 12) {
    if (e >= 0) {
      const auto int_len = static_cast<std::size_t>(e + 1);
      if (int_len >= ds.size()) {
        out += ds + std::string(int_len - ds.size(), '0');
      } else {
        out += ds.substr(0, int_len);
        const std::string frac = strip_trailing_zeros(ds.substr(int_len));
        if (!frac.empty()) out += "." + frac;
      }
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + strip_trailing_zeros(ds);
    }
    return out;
  }
  out += ds.substr(0, 1);
  const std::string frac = strip_trailing_zeros(ds.substr(1));
  if (!frac.empty()) out += "." + frac;
  out += (e < 0 ? "e-" : "e+");
  const long ae = e < 0 ? -e : e;
  if (ae < 10) out += "0";
  out += std::to_string(ae);
  return out;
}

std::string render_decimal(double x, int significant) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  BigRational q(x);  // exact binary value
  return render_decimal(q, significant);
}

BigRational parse_rational(const std::string& text) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    std::string numerator = m[1].str();
    if (numerator.front() == '+') numerator.erase(0, 1);
    // explicit base: GMP would read a leading zero as octal
    BigInt num(numerator, 10);
    BigInt den(m[2].str(), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return canonical(BigRational(num, den));
  }
  if (std::regex_match(text, m, decimal)) {
    const std::string int_part = m[2].str();
    const std::string frac_part = m[3].str();
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("not a number: '" + text + "'");
    }
    const std::string all_digits = int_part + frac_part;
    BigInt mantissa(all_digits.empty() ? "0" : all_digits, 10);
    long exponent = -static_cast<long>(frac_part.size());
    if (m[4].matched) {
      const long given = std::stol(m[4].str());
      if (given > 100000 || given < -100000) throw std::invalid_argument("exponent too large");
      exponent += given;
    }
    BigRational value = canonical(BigRational(mantissa) * pow10_signed(exponent));
    return m[1].str() == "-" ? BigRational(-value) : value;
  }
  throw std::invalid_argument("not a number: '" + text + "'");
}

}  // namespace definetti
