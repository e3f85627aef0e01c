#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "definetti/heisenberg.hpp"
#include "definetti/oracle.hpp"
#include "definetti/su2_cg.hpp"
#include "definetti/symmetric.hpp"
#include "definetti/weights.hpp"

namespace definetti::cli {

namespace {

class Checks {
 public:
  Checks(std::ostream& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  // body fills `detail` and returns whether the check passed; exceptions fail it
  template <class F>
  void run(const std::string& name, F body) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    out_ << (ok ? "PASS " : "FAIL ") << suite_ << '.' << name;
    if (!detail.str().empty()) out_ << "  " << detail.str();
    out_ << '\n';
    all_ok_ = all_ok_ && ok;
  }

  bool ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  std::string suite_;
  bool all_ok_ = true;
};

BigRational fraction(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// ---------------------------------------------------------------- weights

bool suite_weights(const VerifyOptions&, std::ostream& out) {
  Checks c(out, "weights");

  c.run("root_roundtrip", [](std::ostream& d) {
    long cases = 0;
    for (int dim = 2; dim <= 4; ++dim) {
      std::vector<BigRational> coeff(static_cast<std::size_t>(dim - 1), BigRational(-2));
      while (true) {
        const auto v = weights::combine(coeff);
        if (weights::decompose(v).coefficients != coeff) return false;
        ++cases;
        std::size_t i = 0;
        while (i < coeff.size() && coeff[i] == 2) coeff[i++] = -2;
        if (i == coeff.size()) break;
        coeff[i] += 1;
      }
    }
    d << "cases=" << cases;
    return true;
  });

  c.run("w_r_set_matches_height", [](std::ostream& d) {
    long cases = 0;
    for (long d_ = 2; d_ <= 4; ++d_) {
      for (long n = 0; n <= 8; ++n) {
        std::vector<long> top(static_cast<std::size_t>(d_), 0);
        top[0] = n;
        const Weight highest(top);
        for (long r = 0; r <= n; ++r) {
          for (Direction dir : {Direction::down, Direction::up}) {
            const auto set = weights::w_r_set(n, d_, r, dir);
            for (const auto& w : weights::sym_weights(n, d_)) {
              const auto h = dir == Direction::down ? weights::height_down(highest, w)
                                                    : weights::height_up(highest, w);
              const bool inside = h.height <= r;
              const bool listed = std::find(set.begin(), set.end(), w) != set.end();
              if (inside != listed) {
                d << "mismatch at w=" << w.to_string() << " r=" << r;
                return false;
              }
              ++cases;
            }
          }
        }
      }
    }
    d << "cases=" << cases;
    return true;
  });

  c.run("example_radius", [](std::ostream& d) {
    long cases = 0;
    for (long n = 1; n <= 30; ++n) {
      for (long k = 0; 2 * k <= n; ++k) {
        for (long l = 0; l <= k; ++l) {
          if (weights::exact_radius(Weight{n - l, l}, Weight{k, 0}, Weight{n - k, 0}) != k - l) {
            d << "n=" << n << " k=" << k << " l=" << l;
            return false;
          }
          ++cases;
        }
      }
    }
    d << "cases=" << cases;
    return true;
  });

  c.run("lambda_up_inclusion", [](std::ostream& d) {
    long cases = 0;
    for (int J1 = 0; J1 <= 20; ++J1) {
      for (int J2 = 0; J2 <= 20; ++J2) {
        for (int J = std::abs(J1 - J2); J <= J1 + J2; J += 2) {
          const auto set = oracle::lambda_up_set(TwoJ::doubled(J1), TwoJ::doubled(J2), TwoJ::doubled(J));
          const Weight mu{J1, 0};
          const long r = weights::exact_radius(Weight{J, 0}, mu, Weight{J2, 0});
          const auto window = weights::w_r_set(J1, 2, r, Direction::up);
          if (std::find(set.begin(), set.end(), weights::lowest_weight(mu)) == set.end()) {
            d << "lowest weight missing for 2j1=" << J1 << " 2j2=" << J2 << " 2j=" << J;
            return false;
          }
          for (const auto& w : set) {
            if (std::find(window.begin(), window.end(), w) == window.end()) {
              d << w.to_string() << " outside W^r, r=" << r;
              return false;
            }
          }
          ++cases;
        }
      }
    }
    d << "triples=" << cases;
    return true;
  });

  return c.ok();
}

// ---------------------------------------------------------------- cg

bool suite_cg(const VerifyOptions& opt, std::ostream& out) {
  Checks c(out, "cg");

  c.run("oracle_exact_match", [](std::ostream& d) {
    long count = 0;
    for (int J1 = 0; J1 <= 8; ++J1) {
      for (int J2 = 0; J2 <= 8; ++J2) {
        const auto table = oracle::cg_oracle(TwoJ::doubled(J1), TwoJ::doubled(J2));
        for (TwoJ j : table.total_spins()) {
          for (int M = -j.twice(); M <= j.twice(); M += 2) {
            for (int m1 = -J1; m1 <= J1; m1 += 2) {
              const int m2 = M - m1;
              if (std::abs(m2) > J2) continue;
              const ExactReal ref = su2::cg(TwoJ::doubled(J1), TwoJ::doubled(m1), TwoJ::doubled(J2),
                                            TwoJ::doubled(m2), j, TwoJ::doubled(M));
              if (!(table.at(j, TwoJ::doubled(M), TwoJ::doubled(m1)) == ref)) {
                d << "mismatch at 2j1=" << J1 << " 2j2=" << J2 << " 2j=" << j.twice();
                return false;
              }
              ++count;
            }
          }
        }
      }
    }
    d << "exact_matches=" << count;
    return true;
  });

  c.run("oracle_float_match", [&](std::ostream& d) {
    double worst = 0.0;
    for (int J1 = 0; J1 <= 24; J1 += 3) {
      for (int J2 = 0; J2 <= 24; J2 += 4) {
        const auto table = oracle::cg_oracle(TwoJ::doubled(J1), TwoJ::doubled(J2));
        for (TwoJ j : table.total_spins()) {
          for (int M = -j.twice(); M <= j.twice(); M += 2) {
            for (int m1 = -J1; m1 <= J1; m1 += 2) {
              const int m2 = M - m1;
              if (std::abs(m2) > J2) continue;
              const double ref = su2::cg(TwoJ::doubled(J1), TwoJ::doubled(m1), TwoJ::doubled(J2),
                                         TwoJ::doubled(m2), j, TwoJ::doubled(M))
                                     .to_double();
              worst = std::max(worst,
                               std::abs(table.at(j, TwoJ::doubled(M), TwoJ::doubled(m1)).to_double() - ref));
            }
          }
        }
      }
    }
    d << "max_abs_diff=" << sci(worst);
    return worst <= std::min(opt.tolerance, 1e-12);
  });

  c.run("orthogonality_exact", [](std::ostream& d) {
    long sums = 0;
    for (int J1 = 0; J1 <= 6; ++J1) {
      for (int J2 = 0; J2 <= 6; ++J2) {
        const auto table = oracle::cg_oracle(TwoJ::doubled(J1), TwoJ::doubled(J2));
        const auto spins = table.total_spins();
        for (TwoJ ja : spins) {
          for (TwoJ jb : spins) {
            for (int M = -std::min(ja, jb).twice(); M <= std::min(ja, jb).twice(); M += 2) {
              oracle::SurdSum s;
              for (int m1 = -J1; m1 <= J1; m1 += 2) {
                s.add(table.at(ja, TwoJ::doubled(M), TwoJ::doubled(m1)) *
                      table.at(jb, TwoJ::doubled(M), TwoJ::doubled(m1)));
              }
              const auto v = s.rational();
              if (!v || *v != (ja == jb ? 1 : 0)) {
                d << "2j1=" << J1 << " 2j2=" << J2 << " 2j=" << ja.twice() << "," << jb.twice();
                return false;
              }
              ++sums;
            }
          }
        }
      }
    }
    d << "exact_sums=" << sums;
    return true;
  });

  c.run("delta_matches_oracle", [](std::ostream& d) {
    long count = 0;
    for (int J1 = 0; J1 <= 8; ++J1) {
      for (int J2 = 0; J2 <= 8; ++J2) {
        const auto table = oracle::cg_oracle(TwoJ::doubled(J1), TwoJ::doubled(J2));
        for (TwoJ j : table.total_spins()) {
          for (int m2 = -J2; m2 <= J2; m2 += 2) {
            for (long r = 0; r <= J1 + 1; ++r) {
              for (Direction dir : {Direction::down, Direction::up}) {
                const auto rep = su2::delta_su2(TwoJ::doubled(J1), TwoJ::doubled(J2), j,
                                                TwoJ::doubled(m2), r, dir);
                if (*rep.exact != oracle::brute_delta_su2(table, j, TwoJ::doubled(m2), r, dir)) {
                  d << "2j1=" << J1 << " 2j2=" << J2 << " 2j=" << j.twice() << " 2m2=" << m2
                    << " r=" << r;
                  return false;
                }
                ++count;
              }
            }
          }
        }
      }
    }
    d << "exact_matches=" << count;
    return true;
  });

  c.run("top_spin", [](std::ostream& d) {
    long count = 0;
    for (int J1 = 0; J1 <= 40; ++J1) {
      for (int J2 = 0; J2 <= 40; ++J2) {
        const int J = J1 + J2;
        const auto rep = su2::delta_su2(TwoJ::doubled(J1), TwoJ::doubled(J2), TwoJ::doubled(J),
                                        TwoJ::doubled(J2), 0, Direction::down);
        if (*rep.exact != fraction(J2 + 1, J + 1)) {
          d << "2j1=" << J1 << " 2j2=" << J2 << " got " << render_rational(*rep.exact);
          return false;
        }
        ++count;
      }
    }
    d << "pairs=" << count;
    return true;
  });

  c.run("monotone_and_saturating", [](std::ostream& d) {
    for (int J1 = 0; J1 <= 10; ++J1) {
      for (int J2 = 0; J2 <= 10; ++J2) {
        for (int J = std::abs(J1 - J2); J <= J1 + J2; J += 2) {
          const auto prof = su2::delta_su2_profile(TwoJ::doubled(J1), TwoJ::doubled(J2),
                                                   TwoJ::doubled(J), TwoJ::doubled(J2), J1,
                                                   Direction::down);
          for (std::size_t r = 1; r < prof.size(); ++r) {
            if (prof[r] < prof[r - 1]) return false;
          }
          if (prof.back() != 1) {
            d << "delta(r=2j1) != 1 at 2j1=" << J1 << " 2j2=" << J2 << " 2j=" << J;
            return false;
          }
        }
      }
    }
    return true;
  });

  c.run("figure_anchor", [](std::ostream& d) {
    const auto rep = su2::delta_su2(TwoJ::integer(100), TwoJ::integer(100), TwoJ::integer(200),
                                    TwoJ::integer(100), 0, Direction::down);
    const BigRational one_minus = 1 - *rep.exact;
    d << "1-delta=" << render_rational(one_minus);
    return one_minus == BigRational(200, 401);
  });

  return c.ok();
}

// ---------------------------------------------------------------- symmetric

bool suite_symmetric(const VerifyOptions& opt, std::ostream& out) {
  Checks c(out, "symmetric");

  c.run("oracle_agreement", [&](std::ostream& d) {
    double worst = 0.0;
    long cases = 0;
    for (auto [d_, n_max] : {std::pair{2L, 10L}, std::pair{3L, 6L}}) {
      for (long n = 1; n <= n_max; ++n) {
        for (long k = 0; k <= n; ++k) {
          for (long r = 0; r <= k; ++r) {
            const SymTriple t(n, k, r, d_);
            const double formula = 1.0 - BigRational(sym::epsilon(t) / 2).get_d();
            worst = std::max(worst, std::abs(oracle::brute_delta_symmetric(t) - formula));
            ++cases;
          }
        }
      }
    }
    d << "cases=" << cases << " max_abs_diff=" << sci(worst);
    return worst <= opt.tolerance;
  });

  c.run("profile_formula", [](std::ostream& d) {
    long cases = 0;
    for (long d_ = 2; d_ <= 4; ++d_) {
      for (long n = 1; n <= 14; ++n) {
        for (long k = 0; k <= n; ++k) {
          for (long r = 0; r <= k; ++r) {
            const auto set = weights::w_r_set(k, d_, r, Direction::down);
            const auto f = sym::weight_profile(set, k);
            const BigRational delta = sym::delta_psi_weights(n, k, d_, f);
            if (delta != 1 - sym::epsilon(SymTriple(n, k, r, d_)) / 2) {
              d << "n=" << n << " k=" << k << " r=" << r << " d=" << d_;
              return false;
            }
            ++cases;
          }
        }
      }
    }
    d << "cases=" << cases;
    return true;
  });

  c.run("r0_identity", [](std::ostream& d) {
    for (long d_ = 2; d_ <= 5; ++d_) {
      for (long n = 0; n <= 30; ++n) {
        for (long k = 0; k <= n; ++k) {
          const BigRational expect =
              2 * (1 - fraction(sym::dim_sym(n - k, d_), sym::dim_sym(n, d_)));
          if (sym::epsilon(SymTriple(n, k, 0, d_)) != expect) {
            d << "n=" << n << " k=" << k << " d=" << d_;
            return false;
          }
        }
      }
    }
    return true;
  });

  c.run("closed_form_sum", [](std::ostream& d) {
    for (long n = 1; n <= 40; ++n) {
      for (long k = 1; k <= n; ++k) {
        for (long r = 0; r < k; ++r) {
          if (sym::closed_form_sum(n, k, r) != oracle::direct_ratio_sum(n, k, r)) {
            d << "n=" << n << " k=" << k << " r=" << r;
            return false;
          }
        }
      }
    }
    return true;
  });

  c.run("d2_exact_error", [](std::ostream& d) {
    for (long n = 1; n <= 40; ++n) {
      for (long k = 0; k <= n; ++k) {
        for (long r = 0; r <= k; ++r) {
          if (sym::exact_error_d2(n, k, r) != sym::epsilon(SymTriple(n, k, r, 2))) {
            d << "n=" << n << " k=" << k << " r=" << r;
            return false;
          }
        }
      }
    }
    return true;
  });

  c.run("bound_chain", [](std::ostream& d) {
    long cases = 0;
    for (long n = 4; n <= 40; ++n) {
      for (long k = 2; k <= n - 2; ++k) {
        for (long d_ = 2; d_ <= std::min({k, n - k, 5L}); ++d_) {
          for (long r = 0; r <= k; ++r) {
            const SymTriple t(n, k, r, d_);
            const double half_eps = BigRational(sym::epsilon(t) / 2).get_d();
            const auto b = sym::bound_exponential(t);
            if (half_eps > b.intermediate * (1 + 1e-12) || b.intermediate > b.headline * (1 + 1e-12)) {
              d << "n=" << n << " k=" << k << " r=" << r << " d=" << d_;
              return false;
            }
            ++cases;
          }
        }
      }
    }
    d << "cases=" << cases;
    return true;
  });

  c.run("term_overlap", [&](std::ostream& d) {
    double worst = 0.0;
    for (long d_ = 2; d_ <= 3; ++d_) {
      for (long n = 1; n <= (d_ == 2 ? 10 : 7); ++n) {
        for (long k = 0; k <= n; ++k) {
          for (const auto& w : weights::sym_weights(k, d_)) {
            worst = std::max(worst, std::abs(oracle::brute_term_overlap(w, n) -
                                             sym::term_overlap(w, n, k).get_d()));
          }
        }
      }
    }
    d << "max_abs_diff=" << sci(worst);
    return worst <= std::min(opt.tolerance, 1e-12);
  });

  return c.ok();
}

// ---------------------------------------------------------------- heisenberg

bool suite_heisenberg(const VerifyOptions& opt, std::ostream& out) {
  Checks c(out, "heisenberg");

  c.run("oracle_agreement", [&](std::ostream& d) {
    double worst = 0.0;
    double residual = 0.0;
    double norm = 0.0;
    long cases = 0;
    for (long mu : {1, 2, 5, 10}) {
      for (long nu : {1, 3, 10}) {
        for (long delta = 0; delta <= 5; ++delta) {
          for (long r = 0; r <= 10; ++r) {
            const auto rep = oracle::heis_oracle(static_cast<double>(mu), static_cast<double>(nu),
                                                 delta, r, r + delta + 40);
            const auto ref = heis::delta_number_space(
                ExactHeisenbergTriple(BigRational(mu), BigRational(nu), delta, r));
            worst = std::max(worst, std::abs(rep.delta - ref.exact->get_d()));
            residual = std::max(residual, rep.annihilation_residual);
            norm = std::max(norm, rep.norm_defect);
            ++cases;
          }
        }
      }
    }
    d << "cases=" << cases << " max_abs_diff=" << sci(worst) << " max_residual=" << sci(residual)
      << " max_norm_defect=" << sci(norm);
    return worst <= opt.tolerance && residual <= opt.tolerance && norm <= opt.tolerance;
  });

  c.run("orthogonality", [&](std::ostream& d) {
    double worst = 0.0;
    for (double mu : {1.0, 2.5, 7.0}) {
      for (double nu : {1.0, 0.5, 4.0}) {
        worst = std::max(worst, oracle::heis_orthogonality_defect(mu, nu, 8, 40));
      }
    }
    d << "max_defect=" << sci(worst);
    return worst <= opt.tolerance;
  });

  c.run("vacuum_sector_closed_form", [](std::ostream& d) {
    for (long mu = 1; mu <= 10; ++mu) {
      for (long nu = 1; nu <= 10; ++nu) {
        for (long r = 0; r <= 10; ++r) {
          const auto rep = heis::delta_number_space(
              ExactHeisenbergTriple(BigRational(mu), BigRational(nu), 0, r));
          const BigRational expect = 1 - pow(fraction(mu, mu + nu), static_cast<unsigned long>(r + 1));
          if (*rep.exact != expect) {
            d << "mu=" << mu << " nu=" << nu << " r=" << r;
            return false;
          }
        }
      }
    }
    return true;
  });

  c.run("coherent_bound", [](std::ostream& d) {
    const auto anchor = heis::coherent_bound_exact(100, 10, 0);
    if (!anchor || *anchor != BigRational(1, 5)) {
      d << "coherent_bound(100,10,0) != 1/5";
      return false;
    }
    double worst = 0.0;
    for (long n = 2; n <= 200; ++n) {
      for (long k = 1; k < n; ++k) {
        for (long r = 0; r <= 10; ++r) {
          const double a = heis::coherent_bound(n, k, r);
          const double b = heis::epsilon_heisenberg(
              HeisenbergTriple(static_cast<double>(k), static_cast<double>(n - k), 0, r));
          worst = std::max(worst, std::abs(a - b) / std::max(a, 1e-300));
        }
      }
    }
    d << "max_rel_diff=" << sci(worst);
    return worst <= 1e-12;
  });

  return c.ok();
}

// ---------------------------------------------------------------- mc

bool suite_mc(const VerifyOptions& opt, std::ostream& out) {
  Checks c(out, "mc");
  const unsigned threads = opt.parallel ? default_threads() : 1;
  for (long r = 0; r <= 2; ++r) {
    c.run("end_to_end_r" + std::to_string(r), [&](std::ostream& d) {
      const auto rep = oracle::mc_theorem1(4, 2, r, opt.mc_samples, opt.seed, threads);
      d << "n_samples=" << rep.n_samples << " seed=" << rep.seed
        << " lhs_distance=" << render_decimal(rep.lhs_distance, 6)
        << " bound=" << render_decimal(rep.bound, 6)
        << " mc_tolerance=" << render_decimal(rep.mc_tolerance, 6)
        << " identity_residual=" << render_decimal(rep.identity_residual, 6)
        << " identity_tolerance=" << render_decimal(rep.identity_tolerance, 6);
      bool ok = rep.passed() && rep.identity_residual <= rep.identity_tolerance;
      if (r == 2) ok = ok && rep.lhs_distance <= rep.mc_tolerance;
      return ok;
    });
  }
  return c.ok();
}

using Suite = bool (*)(const VerifyOptions&, std::ostream&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"weights", suite_weights},       {"cg", suite_cg}, {"symmetric", suite_symmetric},
      {"heisenberg", suite_heisenberg}, {"mc", suite_mc}};
  return all;
}

}  // namespace

std::vector<std::string> verify_suites() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  names.emplace_back("all");
  return names;
}

bool verify(const std::string& suite, const VerifyOptions& options, std::ostream& out) {
  if (!(options.tolerance > 0.0)) throw UsageError("--tol must be positive");
  if (options.mc_samples < 1000) throw UsageError("--samples must be at least 1000");

  std::vector<std::pair<std::string, Suite>> selected;
  for (const auto& entry : suites()) {
    if (suite == "all" || suite == entry.first) selected.push_back(entry);
  }
  if (selected.empty()) throw UsageError("unknown suite '" + suite + "'");

  std::vector<std::ostringstream> logs(selected.size());
  std::vector<char> passed(selected.size(), 0);
  parallel_for(selected.size(), options.parallel ? default_threads() : 1,
               [&](std::size_t i) { passed[i] = selected[i].second(options, logs[i]) ? 1 : 0; });

  bool ok = true;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    out << logs[i].str();
    ok = ok && passed[i] != 0;
  }
  out << (ok ? "OK" : "FAILED") << '\n';
  return ok;
}

}  // namespace definetti::cli
