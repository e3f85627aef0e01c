#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "definetti/heisenberg.hpp"
#include "definetti/su2_cg.hpp"
#include "definetti/symmetric.hpp"
#include "definetti/weights.hpp"

namespace definetti::cli {

namespace {

class Params {
 public:
  Params(const std::vector<std::string>& raw, std::set<std::string> allowed) {
    for (const auto& item : raw) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      if (allowed.count(key) == 0) throw UsageError("unknown parameter '" + key + "'");
      if (!values_.emplace(key, item.substr(eq + 1)).second) {
        throw UsageError("parameter '" + key + "' given twice");
      }
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  const std::string& text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw UsageError("missing parameter '" + key + "'");
    return it->second;
  }

  long integer(const std::string& key) const {
    const std::string& s = text(key);
    try {
      std::size_t used = 0;
      const long v = std::stol(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("parameter '" + key + "' must be an integer, got '" + s + "'");
  }

  BigRational rational(const std::string& key) const {
    try {
      return parse_rational(text(key));
    } catch (const std::invalid_argument&) {
      throw UsageError("parameter '" + key + "' must be a number, got '" + text(key) + "'");
    }
  }

  TwoJ spin(const std::string& key) const {
    try {
      return TwoJ::parse(text(key));
    } catch (const std::invalid_argument&) {
      throw UsageError("parameter '" + key + "' must be an integer or half-integer, got '" +
                       text(key) + "'");
    }
  }

  Weight weight(const std::string& key) const {
    std::vector<long> entries;
    std::stringstream ss(text(key));
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        entries.push_back(std::stol(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw UsageError("parameter '" + key + "' must be a comma-separated integer list");
      }
    }
    if (entries.size() < 2) throw UsageError("parameter '" + key + "' needs at least two entries");
    return Weight(std::move(entries));
  }

 private:
  std::map<std::string, std::string> values_;
};

std::string exact_line(const BigRational& q) { return render_rational(q) + " = " + render_decimal(q); }

Direction parse_direction(const Params& p) {
  if (!p.has("dir")) return Direction::down;
  const std::string& d = p.text("dir");
  if (d == "down") return Direction::down;
  if (d == "up") return Direction::up;
  throw UsageError("dir must be 'down' or 'up', got '" + d + "'");
}

ExactHeisenbergTriple heis_triple(const Params& p) {
  return ExactHeisenbergTriple(p.rational("mu"), p.rational("nu"), p.integer("delta"),
                               p.integer("r"));
}

}  // namespace

std::vector<std::string> compute_subcommands() {
  return {"su2-delta",    "sym-epsilon",    "sym-bound",    "heis-delta",
          "heis-epsilon", "coherent-bound", "exact-radius", "closed-form-sum"};
}

std::string compute(const std::string& sub, const std::vector<std::string>& raw) {
  if (sub == "su2-delta") {
    const Params p(raw, {"j1", "j2", "j", "m2", "r", "dir"});
    const TwoJ j2 = p.spin("j2");
    const TwoJ m2 = p.has("m2") ? p.spin("m2") : j2;
    const DeltaReport rep =
        su2::delta_su2(p.spin("j1"), j2, p.spin("j"), m2, p.integer("r"), parse_direction(p));
    return exact_line(*rep.exact);
  }
  if (sub == "sym-epsilon") {
    const Params p(raw, {"n", "k", "r", "d"});
    return exact_line(sym::epsilon(SymTriple(p.integer("n"), p.integer("k"), p.integer("r"),
                                             p.integer("d"))));
  }
  if (sub == "sym-bound") {
    const Params p(raw, {"n", "k", "r", "d", "which"});
    const auto b = sym::bound_exponential(
        SymTriple(p.integer("n"), p.integer("k"), p.integer("r"), p.integer("d")));
    const std::string which = p.has("which") ? p.text("which") : "headline";
    if (which == "headline") return render_decimal(b.headline);
    if (which == "intermediate") return render_decimal(b.intermediate);
    throw UsageError("which must be 'headline' or 'intermediate', got '" + which + "'");
  }
  if (sub == "heis-delta") {
    const Params p(raw, {"mu", "nu", "delta", "r"});
    return exact_line(*heis::delta_number_space(heis_triple(p)).exact);
  }
  if (sub == "heis-epsilon") {
    const Params p(raw, {"mu", "nu", "delta", "r"});
    const auto t = heis_triple(p);
    if (const auto q = heis::epsilon_heisenberg_exact(t)) return exact_line(*q);
    return render_decimal(heis::epsilon_heisenberg(t));
  }
  if (sub == "coherent-bound") {
    const Params p(raw, {"n", "k", "r"});
    const long n = p.integer("n");
    const long k = p.integer("k");
    const long r = p.integer("r");
    if (const auto q = heis::coherent_bound_exact(n, k, r)) return exact_line(*q);
    return render_decimal(heis::coherent_bound(n, k, r));
  }
  if (sub == "exact-radius") {
    const Params p(raw, {"d", "n", "k", "l", "lambda", "mu", "nu"});
    if (p.has("lambda") || p.has("mu") || p.has("nu")) {
      if (p.has("n") || p.has("k") || p.has("l") || p.has("d")) {
        throw UsageError("give either lambda/mu/nu or d/n/k/l");
      }
      return std::to_string(weights::exact_radius(p.weight("lambda"), p.weight("mu"), p.weight("nu")));
    }
    if (p.integer("d") != 2) throw UsageError("the n/k/l form needs d=2");
    const long n = p.integer("n");
    const long k = p.integer("k");
    const long l = p.integer("l");
    if (k < 0 || k > n || l < 0 || l > std::min(k, n - k)) {
      throw UsageError("need 0 <= k <= n and 0 <= l <= min(k, n-k)");
    }
    // Sym^k (x) Sym^(n-k) containing the irrep with highest weight (n-l, l)
    return std::to_string(weights::exact_radius(Weight{n - l, l}, Weight{k, 0}, Weight{n - k, 0}));
  }
  if (sub == "closed-form-sum") {
    const Params p(raw, {"n", "k", "r"});
    return exact_line(sym::closed_form_sum(p.integer("n"), p.integer("k"), p.integer("r")));
  }
  std::string known;
  for (const auto& s : compute_subcommands()) known += " " + s;
  throw UsageError("unknown compute subcommand '" + sub + "'; expected one of:" + known);
}

}  // namespace definetti::cli
