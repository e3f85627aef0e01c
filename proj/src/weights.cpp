#include "definetti/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace definetti {

Weight::Weight(std::vector<long> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw std::invalid_argument("Weight: need at least two entries");
}

long Weight::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

Weight Weight::reversed() const {
  return Weight(std::vector<long>(entries_.rbegin(), entries_.rend()));
}

Weight Weight::normalized() const {
  std::vector<long> e = entries_;
  const long last = e.back();
  for (auto& x : e) x -= last;
  return Weight(std::move(e));
}

Weight Weight::operator+(const Weight& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("Weight: length mismatch");
  std::vector<long> e = entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
  return Weight(std::move(e));
}

Weight Weight::operator-(const Weight& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("Weight: length mismatch");
  std::vector<long> e = entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.entries_[i];
  return Weight(std::move(e));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

RootIndex::RootIndex(int index, int dimension) : index_(index), dimension_(dimension) {
  if (dimension < 2) throw std::invalid_argument("RootIndex: dimension must be >= 2");
  if (index < 1 || index > dimension - 1) {
    throw std::out_of_range("RootIndex: i=" + std::to_string(index) + " outside [1, " +
                            std::to_string(dimension - 1) + "]");
  }
}

namespace weights {

namespace {

std::vector<BigRational> to_rational(const Weight& w) {
  std::vector<BigRational> out;
  out.reserve(w.dimension());
  for (long x : w.entries()) out.emplace_back(x);
  return out;
}

void require_same_shape(const Weight& a, const Weight& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("weights " + a.to_string() + " and " + b.to_string() +
                                " have different lengths");
  }
}

void require_same_total(const Weight& a, const Weight& b) {
  require_same_shape(a, b);
  if (a.total() != b.total()) {
    throw std::invalid_argument("weights " + a.to_string() + " and " + b.to_string() +
                                " have different coordinate sums");
  }
}

void compositions(long remaining, std::size_t slot, std::vector<long>& current,
                  std::vector<Weight>& out) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.emplace_back(current);
    return;
  }
  for (long x = remaining; x >= 0; --x) {
    current[slot] = x;
    compositions(remaining - x, slot + 1, current, out);
  }
}

}  // namespace

Weight simple_root(RootIndex i) {
  std::vector<long> e(static_cast<std::size_t>(i.dimension()), 0);
  e[static_cast<std::size_t>(i.index() - 1)] = 1;
  e[static_cast<std::size_t>(i.index())] = -1;
  return Weight(std::move(e));
}

Weight simple_root(int i, int d) { return simple_root(RootIndex(i, d)); }

WeightOrder compare(const Weight& w, const Weight& w2) {
  require_same_shape(w, w2);
  if (w.total() != w2.total()) return WeightOrder::incomparable;
  long a = 0;
  long b = 0;
  for (std::size_t l = 0; l < w.dimension(); ++l) {
    a += w[l];
    b += w2[l];
    if (a > b) return WeightOrder::not_less_or_equal;
  }
  return WeightOrder::less_or_equal;
}

bool weight_leq(const Weight& w, const Weight& w2) {
  return compare(w, w2) == WeightOrder::less_or_equal;
}

HeightDecomposition decompose(std::span<const BigRational> v) {
  if (v.size() < 2) throw std::invalid_argument("decompose: need d >= 2");
  HeightDecomposition out;
  out.coefficients.reserve(v.size() - 1);
  BigRational prefix = 0;
  out.height = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    prefix += v[i];
    out.coefficients.push_back(prefix);
    out.height = std::max(out.height, BigRational(abs(prefix)));
  }
  if (prefix + v.back() != 0) {
    throw std::invalid_argument("decompose: vector is not in the span of the simple roots");
  }
  return out;
}

std::vector<BigRational> combine(std::span<const BigRational> coefficients) {
  const std::size_t d = coefficients.size() + 1;
  std::vector<BigRational> v(d, BigRational(0));
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    v[i] += coefficients[i];
    v[i + 1] -= coefficients[i];
  }
  return v;
}

HeightDecomposition height_down(const Weight& lambda, const Weight& w) {
  require_same_total(lambda, w);
  return decompose(to_rational(lambda - w));
}

Weight lowest_weight(const Weight& mu) { return mu.reversed(); }

HeightDecomposition height_up(const Weight& mu, const Weight& w) {
  require_same_total(mu, w);
  return decompose(to_rational(w - lowest_weight(mu)));
}

std::vector<Weight> sym_weights(long n, long d) {
  if (n < 0) throw std::invalid_argument("sym_weights: n must be >= 0");
  if (d < 2) throw std::invalid_argument("sym_weights: d must be >= 2");
  std::vector<Weight> out;
  std::vector<long> current(static_cast<std::size_t>(d), 0);
  compositions(n, 0, current, out);
  return out;
}

std::vector<Weight> w_r_set(long n, long d, long r, Direction direction) {
  if (r < 0) throw std::invalid_argument("w_r_set: r must be >= 0");
  std::vector<Weight> all = sym_weights(n, d);
  std::vector<Weight> out;
  for (auto& w : all) {
    const long extremal = direction == Direction::down ? w[0] : w[w.dimension() - 1];
    if (extremal >= n - r) out.push_back(std::move(w));
  }
  return out;
}

BigInt type_class_size(const Weight& w) {
  unsigned long n = 0;
  for (long x : w.entries()) {
    if (x < 0) throw std::invalid_argument("type_class_size: negative entry in " + w.to_string());
    n += static_cast<unsigned long>(x);
  }
  BigInt denominator = 1;
  for (long x : w.entries()) denominator *= factorial(static_cast<unsigned long>(x));
  return factorial(n) / denominator;
}

long exact_radius(const Weight& lambda, const Weight& mu, const Weight& nu) {
  require_same_shape(lambda, mu);
  require_same_shape(lambda, nu);
  const Weight l = lambda.normalized();
  const Weight m = mu.normalized();
  const Weight v = nu.normalized();
  const auto d = static_cast<long>(l.dimension());

  // lambda is only defined up to multiples of (1,...,1)
  BigRational shift(m.total() + v.total() - l.total(), d);
  shift.canonicalize();

  const Weight base = l - v - lowest_weight(m);
  std::vector<BigRational> diff;
  diff.reserve(base.dimension());
  for (long x : base.entries()) diff.push_back(BigRational(x) + shift);

  const HeightDecomposition h = decompose(diff);
  for (const auto& c : h.coefficients) {
    if (c.get_den() != 1) {
      throw std::invalid_argument("exact_radius: (" + lambda.to_string() + ", " + mu.to_string() +
                                  ", " + nu.to_string() +
                                  ") has a non-integral root decomposition");
    }
  }
  return h.height.get_num().get_si();
}

}  // namespace weights

}  // namespace definetti
