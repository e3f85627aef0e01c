#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "definetti/oracle.hpp"

namespace definetti::oracle {

namespace {

// n = square * kernel with kernel squarefree. Radicands here are products of
// small factorial ratios, so trial division finishes quickly; the fallback
// handles a leftover that is prime or a prime square.
void squarefree_split(const BigInt& n, BigInt& square_root, BigInt& kernel) {
  BigInt rest = n;
  square_root = 1;
  kernel = 1;
  for (unsigned long p = 2; p < 100000 && BigInt(p) * p <= rest; ++p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long i = 0; i < e / 2; ++i) square_root *= p;
    if (e % 2 == 1) kernel *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
      square_root *= root;
    } else {
      kernel *= rest;
    }
  }
}

BigRational quarter(long a, long b) {
  BigRational q(BigInt(a) * b, 4);
  q.canonicalize();
  return q;
}

void require_spin(TwoJ j, const char* what) {
  if (j.twice() < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
  if (j.twice() > kMaxCgTwoJ) {
    throw std::length_error(std::string("cg_oracle: ") + what + " = " + j.to_string() +
                            " exceeds the table guard 12");
  }
}

}  // namespace

void SurdSum::add(const ExactReal& x) {
  if (x.is_zero()) return;
  // s sqrt(a/b) = (s f / b) sqrt(c) with a b = f^2 c
  const BigRational& q = x.radicand();
  BigInt f;
  BigInt c;
  squarefree_split(BigInt(q.get_num() * q.get_den()), f, c);
  BigRational coeff(f * x.sign(), q.get_den());
  coeff.canonicalize();
  auto& slot = terms_[c];
  slot += coeff;
  if (slot == 0) terms_.erase(c);
}

std::optional<BigRational> SurdSum::rational() const {
  if (terms_.empty()) return BigRational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  return std::nullopt;
}

double SurdSum::to_double() const {
  double v = 0.0;
  for (const auto& [kernel, coeff] : terms_) {
    v += coeff.get_d() * ExactReal::sqrt(BigRational(kernel)).to_double();
  }
  return v;
}

CgTable::CgTable(TwoJ j1, TwoJ j2) : j1_(j1), j2_(j2) {
  require_spin(j1, "j1");
  require_spin(j2, "j2");
  const int J1 = j1.twice();
  const int J2 = j2.twice();

  for (int J = J1 + J2; J >= std::abs(J1 - J2); J -= 2) {
    // Highest vector: the kernel of J+ in the M = J sector, equivalently the
    // complement of the states already built for larger j.
    const int low = std::max(-J1, J - J2);
    std::map<int, ExactReal> top;
    top[J1] = ExactReal::rational(1);
    for (int m1 = J1; m1 - 2 >= low; m1 -= 2) {
      const int m2 = J + 2 - m1;
      const BigRational num = quarter(J2 - m2 + 2, J2 + m2);
      const BigRational den = quarter(J1 - m1 + 2, J1 + m1);
      top[m1 - 2] = -(top[m1] * ExactReal::sqrt(num / den));
    }
    BigRational norm2 = 0;
    for (const auto& [m1, c] : top) norm2 += c.square();
    const ExactReal norm = ExactReal::sqrt(norm2);
    for (auto& [m1, c] : top) c = c / norm;
    for (const auto& [m1, c] : top) entries_[{J, J, m1}] = c;

    // Lowering: J-|j m> = sqrt((j+m)(j-m+1)) |j m-1>.
    std::map<int, ExactReal> current = std::move(top);
    for (int M = J; M - 2 >= -J; M -= 2) {
      const int next_m = M - 2;
      const ExactReal scale = ExactReal::sqrt(quarter(J + M, J - M + 2));
      std::map<int, ExactReal> next;
      for (int m1 = -J1; m1 <= J1; m1 += 2) {
        const int m2 = next_m - m1;
        if (std::abs(m2) > J2) continue;
        ExactReal acc;
        if (auto it = current.find(m1 + 2); it != current.end()) {
          acc = acc + it->second * ExactReal::sqrt(quarter(J1 + m1 + 2, J1 - m1));
        }
        if (auto it = current.find(m1); it != current.end()) {
          acc = acc + it->second * ExactReal::sqrt(quarter(J2 + m2 + 2, J2 - m2));
        }
        next[m1] = acc / scale;
      }
      for (const auto& [m1, c] : next) {
        if (!c.is_zero()) entries_[{J, next_m, m1}] = c;
      }
      current = std::move(next);
    }
  }
}

ExactReal CgTable::at(TwoJ j, TwoJ m, TwoJ m1) const {
  const auto it = entries_.find({j.twice(), m.twice(), m1.twice()});
  return it == entries_.end() ? ExactReal() : it->second;
}

std::vector<TwoJ> CgTable::total_spins() const {
  std::vector<TwoJ> out;
  for (int J = j1_.twice() + j2_.twice(); J >= std::abs(j1_.twice() - j2_.twice()); J -= 2) {
    out.push_back(TwoJ::doubled(J));
  }
  return out;
}

long CgTable::multiplet_size(TwoJ j) const {
  long count = 0;
  int last = j.twice() + 1;  // entries are sorted by (J, M, m1)
  for (auto it = entries_.lower_bound({j.twice(), -kMaxCgTwoJ * 2 - 2, 0});
       it != entries_.end() && std::get<0>(it->first) == j.twice(); ++it) {
    if (std::get<1>(it->first) != last) {
      last = std::get<1>(it->first);
      ++count;
    }
  }
  return count;
}

CgTable cg_oracle(TwoJ j1, TwoJ j2) { return CgTable(j1, j2); }

BigRational brute_delta_su2(const CgTable& table, TwoJ j, TwoJ m2, long r, Direction direction) {
  const int J1 = table.j1().twice();
  const int J2 = table.j2().twice();
  if (r < 0) throw std::invalid_argument("brute_delta_su2: r must be >= 0");
  if (std::abs(m2.twice()) > J2 || (J2 - m2.twice()) % 2 != 0) {
    throw std::invalid_argument("brute_delta_su2: m2 is not a state of j2");
  }
  const long d_c = table.multiplet_size(j);
  if (d_c == 0) throw std::invalid_argument("brute_delta_su2: j does not occur");
  long d_b = 0;
  for (int m = -J2; m <= J2; m += 2) ++d_b;

  BigRational trace = 0;
  for (int m1 = -J1; m1 <= J1; m1 += 2) {
    const long steps = direction == Direction::down ? (J1 - m1) / 2 : (J1 + m1) / 2;
    if (steps > r) continue;
    trace += table.at(j, TwoJ::doubled(m1 + m2.twice()), TwoJ::doubled(m1)).square();
  }
  BigRational ratio(d_b, d_c);
  ratio.canonicalize();
  BigRational delta = ratio * trace;
  delta.canonicalize();
  return delta;
}

std::vector<Weight> lambda_up_set(TwoJ j1, TwoJ j2, TwoJ j) {
  const long J1 = j1.twice();
  const long J2 = j2.twice();
  const long J = j.twice();
  if (J1 < 0 || J2 < 0 || J < std::abs(J1 - J2) || J > J1 + J2 || (J1 + J2 + J) % 2 != 0) {
    throw std::invalid_argument("lambda_up_set: (" + j1.to_string() + ", " + j2.to_string() +
                                ", " + j.to_string() + ") violates the triangle rule");
  }
  // lambda = (J + c, c) with the same total as mu + nu
  const long c = (J1 + J2 - J) / 2;
  auto in_lambda = [&](long a, long b) {
    return a + b == J + 2 * c && b >= c && b <= J + c;
  };
  std::vector<Weight> out;
  for (long b = 0; b <= J1; ++b) {
    const long a = J1 - b;
    if (in_lambda(a + J2, b)) out.push_back(Weight{a, b});
  }
  return out;
}

}  // namespace definetti::oracle
