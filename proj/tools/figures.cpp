#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "definetti/heisenberg.hpp"
#include "definetti/su2_cg.hpp"

namespace definetti::cli {

namespace {

TwoJ spin_or(const std::optional<std::string>& text, TwoJ fallback, const char* name) {
  if (!text) return fallback;
  try {
    return TwoJ::parse(*text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("--") + name + " must be an integer or half-integer");
  }
}

BigRational rational_or(const std::optional<std::string>& text, long fallback, const char* name) {
  if (!text) return fallback;
  try {
    return parse_rational(*text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("--") + name + " must be a number");
  }
}

struct Column {
  std::string header;
  std::vector<BigRational> one_minus_delta;  // indexed by r
};

std::vector<BigRational> complement(std::vector<BigRational> deltas) {
  for (auto& d : deltas) d = 1 - d;
  return deltas;
}

// Spin columns j in [j_lo, j_hi] that satisfy the triangle rule.
std::vector<TwoJ> spin_range(TwoJ j1, TwoJ j2, TwoJ lo, TwoJ hi) {
  if (lo > hi) throw UsageError("empty j range");
  std::vector<TwoJ> out;
  for (int J = lo.twice(); J <= hi.twice(); J += 2) {
    if (!su2::triangle(j1, j2, TwoJ::doubled(J))) {
      throw UsageError("j=" + TwoJ::doubled(J).to_string() + " violates the triangle rule for j1=" +
                       j1.to_string() + ", j2=" + j2.to_string());
    }
    out.push_back(TwoJ::doubled(J));
  }
  return out;
}

}  // namespace

std::string figure_csv(const FigureSpec& spec) {
  if (spec.figure_id < 1 || spec.figure_id > 3) throw UsageError("figure must be 1, 2 or 3");
  const long r_max = spec.r_max.value_or(40);
  if (r_max < 0) throw UsageError("--r-max must be >= 0");

  const TwoJ j1 = spin_or(spec.j1, TwoJ::integer(100), "j1");
  const TwoJ j2 = spin_or(spec.j2, TwoJ::integer(100), "j2");
  if (j1.twice() < 0 || j2.twice() < 0) throw UsageError("spins must be >= 0");
  const TwoJ m2 = spin_or(spec.m2, j2, "m2");
  if (m2 > j2 || m2 < -j2 || (j2 - m2).twice() % 2 != 0) throw UsageError("--m2 is not a state of j2");

  // (label, task) pairs; each task fills one column
  std::vector<std::string> headers;
  std::vector<std::function<std::vector<BigRational>()>> tasks;

  auto add_su2 = [&](const std::string& prefix, TwoJ j, Direction dir) {
    headers.push_back(prefix + j.to_string());
    tasks.emplace_back([=] { return complement(su2::delta_su2_profile(j1, j2, j, m2, r_max, dir)); });
  };

  if (spec.figure_id == 1 || spec.figure_id == 2) {
    if (spec.mu || spec.nu || spec.delta_min || spec.delta_max) {
      throw UsageError("--mu/--nu/--delta-* apply to figure 3 only");
    }
    const TwoJ top = j1 + j2;
    const TwoJ bottom = j1 > j2 ? j1 - j2 : j2 - j1;
    const TwoJ lo = spin_or(spec.j_min,
                            spec.figure_id == 1 ? std::max(bottom, top - TwoJ::integer(10)) : bottom,
                            "j-min");
    const TwoJ hi = spin_or(spec.j_max,
                            spec.figure_id == 1 ? top : std::min(top, bottom + TwoJ::integer(30)),
                            "j-max");
    const Direction dir = spec.figure_id == 1 ? Direction::down : Direction::up;
    for (TwoJ j : spin_range(j1, j2, lo, hi)) add_su2("j=", j, dir);
  } else {
    if (spec.j_min || spec.j_max) throw UsageError("--j-min/--j-max apply to figures 1 and 2");
    const BigRational mu = rational_or(spec.mu, 50, "mu");
    const BigRational nu = rational_or(spec.nu, 50, "nu");
    if (mu <= 0 || nu <= 0) throw UsageError("--mu and --nu must be positive");
    const long d_lo = spec.delta_min.value_or(0);
    const long d_hi = spec.delta_max.value_or(10);
    if (d_lo < 0 || d_lo > d_hi) throw UsageError("invalid Delta range");
    for (long delta = d_lo; delta <= d_hi; ++delta) {
      headers.push_back("Delta=" + std::to_string(delta));
      tasks.emplace_back([=] {
        std::vector<BigRational> col;
        for (long r = 0; r <= r_max; ++r) {
          col.push_back(1 - *heis::delta_number_space(ExactHeisenbergTriple(mu, nu, delta, r)).exact);
        }
        return col;
      });
    }
    // SU(2) overlay: j = j1 + j2 - Delta, highest-weight side
    for (long delta = d_lo; delta <= d_hi; ++delta) {
      const TwoJ j = j1 + j2 - TwoJ::integer(static_cast<int>(delta));
      if (!su2::triangle(j1, j2, j)) throw UsageError("Delta range leaves the SU(2) triangle");
      add_su2("su2_j=", j, Direction::down);
    }
  }

  std::vector<std::vector<BigRational>> columns(tasks.size());
  parallel_for(tasks.size(), spec.threads, [&](std::size_t i) { columns[i] = tasks[i](); });

  std::ostringstream os;
  os << "r";
  for (const auto& h : headers) os << ',' << h;
  os << '\n';
  for (long r = 0; r <= r_max; ++r) {
    os << r;
    for (const auto& col : columns) os << ',' << render_decimal(col[static_cast<std::size_t>(r)]);
    os << '\n';
  }
  return os.str();
}

}  // namespace definetti::cli
