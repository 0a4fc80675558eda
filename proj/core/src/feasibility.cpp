#include "oneq/feasibility.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "oneq/errors.hpp"
#include "simplex.hpp"

namespace oneq {

// ---------------------------------------------------------------------------
// WeightCertificate

WeightCertificate::WeightCertificate(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw std::invalid_argument("certificate needs weights c_0..c_n, n >= 1");
  Rational sum = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) {
      throw std::invalid_argument("weight c" + std::to_string(i) + " is negative");
    }
    sum += weights_[i];
  }
  if (sum != 1) throw std::invalid_argument("weights sum to " + to_fraction(sum) + ", not 1");
}

WeightCertificate WeightCertificate::uniform(int n) {
  std::vector<Rational> w(static_cast<std::size_t>(n) + 1, Rational(1, n));
  w[0] = 0;
  return WeightCertificate(std::move(w));
}

WeightCertificate WeightCertificate::point_mass(int n) {
  std::vector<Rational> w(static_cast<std::size_t>(n) + 1, Rational(0));
  w[0] = 1;
  return WeightCertificate(std::move(w));
}

std::vector<int> WeightCertificate::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] > 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::string serialize(const WeightCertificate& c) {
  std::ostringstream out;
  out << "n=" << c.arity() << '\n';
  for (int i = 0; i <= c.arity(); ++i) out << 'c' << i << '=' << to_fraction(c[i]) << '\n';
  return out.str();
}

WeightCertificate parse_certificate(std::string_view text) {
  std::optional<int> n;
  std::map<int, Rational> weights;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value");
    const auto key = line.substr(0, eq);
    const auto value = line.substr(eq + 1);
    if (key == "n") {
      int v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (n || ec != std::errc{} || ptr != value.data() + value.size() || v < 1) {
        throw ParseError(line_no, "bad header '" + std::string(line) + "'");
      }
      n = v;
      continue;
    }
    if (!n) throw ParseError(line_no, "missing n=<int> header");
    int index = -1;
    if (key.size() < 2 || key.front() != 'c') throw ParseError(line_no, "expected c<i>=<p>/<q>");
    auto [ptr, ec] = std::from_chars(key.data() + 1, key.data() + key.size(), index);
    if (ec != std::errc{} || ptr != key.data() + key.size() || index < 0 || index > *n) {
      throw ParseError(line_no, "bad weight index '" + std::string(key) + "'");
    }
    if (weights.contains(index)) throw ParseError(line_no, "weight c" + std::to_string(index) + " repeated");
    try {
      weights.emplace(index, parse_rational(value));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!n) throw ParseError(0, "missing n=<int> header");
  if (weights.size() != static_cast<std::size_t>(*n) + 1) {
    throw ParseError(0, "expected " + std::to_string(*n + 1) + " weights, got " +
                            std::to_string(weights.size()));
  }
  std::vector<Rational> w;
  for (auto& [i, r] : weights) w.push_back(std::move(r));
  try {
    return WeightCertificate(std::move(w));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

// ---------------------------------------------------------------------------
// Constraint system

ConstraintSystem build_constraints(const PartialBooleanFunction& f) {
  ConstraintSystem cs;
  cs.n = f.arity();
  std::unordered_map<std::uint64_t, std::size_t> index_of;
  const auto entries = f.entries();
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      if (entries[a].second == entries[b].second) continue;
      const auto s = differing_set(entries[a].first, entries[b].first);
      if (s.empty()) cs.empty_set_contradiction = true;
      if (index_of.emplace(s.mask(), cs.constraints.size()).second) {
        cs.constraints.push_back({s, entries[a].first, entries[b].first});
      }
    }
  }
  std::sort(cs.constraints.begin(), cs.constraints.end(),
            [](const Constraint& l, const Constraint& r) { return l.set < r.set; });
  return cs;
}

namespace {

using detail::Row;

std::size_t normalization_row(const ConstraintSystem& cs) { return cs.constraints.size(); }

Row coefficients(const ConstraintSystem& cs, std::size_t r) {
  Row a(static_cast<std::size_t>(cs.n) + 1, Rational(0));
  if (r == normalization_row(cs)) {
    std::fill(a.begin(), a.end(), Rational(1));
  } else {
    for (int i : cs.constraints[r].set.members()) a[static_cast<std::size_t>(i)] = 1;
  }
  return a;
}

Rational rhs(const ConstraintSystem& cs, std::size_t r) {
  return r == normalization_row(cs) ? Rational(1) : Rational(1, 2);
}

std::string label(const ConstraintSystem& cs, std::size_t r) {
  if (r == normalization_row(cs)) return "sum(c)=1";
  const auto& k = cs.constraints[r];
  return "S" + k.set.to_string() + "=1/2 [" + k.first.to_string() + " vs " +
         k.second.to_string() + "]";
}

// Sparse combination of original rows.
using Combo = std::map<std::size_t, Rational>;

void axpy(Combo& dst, const Rational& factor, const Combo& src) {
  for (const auto& [r, v] : src) {
    auto& slot = dst[r];
    slot += factor * v;
    if (slot == 0) dst.erase(r);
  }
}

std::string describe(const ConstraintSystem& cs, const Combo& combo) {
  std::string s;
  for (const auto& [r, v] : combo) {
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    s += to_fraction(abs(v)) + "*" + label(cs, r);
  }
  return s;
}

struct PivotRow {
  std::size_t column;
  Row a;
  Rational b;
  Combo combo;
};

struct Reduction {
  std::vector<PivotRow> pivots;
  std::vector<std::string> trace;
  std::optional<Infeasibility> contradiction;
};

// Streams rows through exact reduced-row-echelon elimination, normalization
// row first. Stops at the first row that reduces to 0 = nonzero.
Reduction eliminate(const ConstraintSystem& cs) {
  Reduction out;
  const std::size_t rows = cs.constraints.size() + 1;
  for (std::size_t step = 0; step < rows; ++step) {
    const std::size_t r = step == 0 ? normalization_row(cs) : step - 1;
    Row a = coefficients(cs, r);
    Rational b = rhs(cs, r);
    Combo combo{{r, Rational(1)}};
    for (const auto& p : out.pivots) {
      const Rational factor = a[p.column];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < a.size(); ++j) a[j] -= factor * p.a[j];
      b -= factor * p.b;
      axpy(combo, -factor, p.combo);
    }
    const auto lead = std::find_if(a.begin(), a.end(), [](const Rational& v) { return v != 0; });
    if (lead == a.end()) {
      if (b == 0) continue;  // redundant
      if (b < 0) {
        for (auto& [k, v] : combo) v = -v;
        b = -b;
      }
      Infeasibility why;
      why.trace = out.trace;
      why.trace.push_back("inconsistent: " + describe(cs, combo) + " gives 0 = " + to_fraction(b));
      why.farkas.multipliers.assign(rows, Rational(0));
      for (const auto& [k, v] : combo) why.farkas.multipliers[k] = v;
      why.pure_equality = true;
      out.contradiction = std::move(why);
      return out;
    }
    const std::size_t column = static_cast<std::size_t>(lead - a.begin());
    const Rational scale = a[column];
    for (auto& v : a) v /= scale;
    b /= scale;
    for (auto& [k, v] : combo) v /= scale;
    for (auto& p : out.pivots) {
      const Rational factor = p.a[column];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < a.size(); ++j) p.a[j] -= factor * a[j];
      p.b -= factor * b;
      axpy(p.combo, -factor, combo);
    }
    out.trace.push_back("pivot c" + std::to_string(column) + " on " + label(cs, r));
    out.pivots.push_back({column, std::move(a), std::move(b), std::move(combo)});
  }
  return out;
}

struct PhaseOne {
  detail::Tableau tableau;
  std::size_t originals = 0;
  std::vector<std::string> trace;
  bool feasible = false;
};

// Phase one on the independent rows left by elimination: artificial basis,
// minimize the artificial sum with Bland's rule.
PhaseOne run_phase_one(const ConstraintSystem& cs, Reduction& red) {
  PhaseOne out;
  out.originals = static_cast<std::size_t>(cs.n) + 1;
  const std::size_t k = red.pivots.size();
  auto& t = out.tableau;
  t.a.assign(k, Row(out.originals + k, Rational(0)));
  t.b.assign(k, Rational(0));
  t.basis.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    auto& p = red.pivots[r];
    if (p.b < 0) {
      for (auto& v : p.a) v = -v;
      p.b = -p.b;
      for (auto& [i, v] : p.combo) v = -v;
    }
    std::copy(p.a.begin(), p.a.end(), t.a[r].begin());
    t.a[r][out.originals + r] = 1;
    t.b[r] = p.b;
    t.basis[r] = out.originals + r;
  }
  Row cost(out.originals + k, Rational(0));
  std::fill(cost.begin() + static_cast<std::ptrdiff_t>(out.originals), cost.end(), Rational(1));
  const std::vector<bool> allowed(out.originals + k, true);
  t.minimize(cost, allowed, [&](std::size_t enter, std::size_t leave_row) {
    out.trace.push_back("simplex: c" + std::to_string(enter) + " enters, " +
                        (t.basis[leave_row] >= out.originals
                             ? "a" + std::to_string(t.basis[leave_row] - out.originals)
                             : "c" + std::to_string(t.basis[leave_row])) +
                        " leaves");
  });
  out.feasible = t.objective(cost) == 0;
  return out;
}

Infeasibility phase_one_contradiction(const ConstraintSystem& cs, const Reduction& red,
                                      const PhaseOne& p1) {
  const auto& t = p1.tableau;
  const std::size_t k = red.pivots.size();
  // Duals y = c_B B^-1; B^-1 sits in the artificial columns.
  std::vector<Rational> y(k, Rational(0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      if (t.basis[i] >= p1.originals) y[r] += t.a[i][p1.originals + r];
    }
  }
  Combo combo;
  for (std::size_t r = 0; r < k; ++r) axpy(combo, y[r], red.pivots[r].combo);

  Infeasibility why;
  why.trace = red.trace;
  why.trace.insert(why.trace.end(), p1.trace.begin(), p1.trace.end());
  Rational objective = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (t.basis[i] >= p1.originals) objective += t.b[i];
  }
  why.trace.push_back("phase-one optimum " + to_fraction(objective) +
                      " > 0: no non-negative solution");
  why.trace.push_back("farkas: " + describe(cs, combo));
  why.farkas.multipliers.assign(cs.constraints.size() + 1, Rational(0));
  for (const auto& [r, v] : combo) why.farkas.multipliers[r] = v;
  if (!verify_farkas(cs, why.farkas)) {
    throw std::logic_error("phase-one duals do not certify infeasibility");
  }
  return why;
}

}  // namespace

bool verify_farkas(const ConstraintSystem& cs, const FarkasCertificate& y) {
  const std::size_t rows = cs.constraints.size() + 1;
  if (y.multipliers.size() != rows) return false;
  Row combined(static_cast<std::size_t>(cs.n) + 1, Rational(0));
  Rational total = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& m = y.multipliers[r];
    if (m == 0) continue;
    const Row a = coefficients(cs, r);
    for (std::size_t j = 0; j < a.size(); ++j) combined[j] += m * a[j];
    total += m * rhs(cs, r);
  }
  return total > 0 &&
         std::all_of(combined.begin(), combined.end(), [](const Rational& v) { return v <= 0; });
}

FeasibilityOutcome solve_feasibility(const ConstraintSystem& cs) {
  Reduction red = eliminate(cs);
  if (red.contradiction) return FeasibilityOutcome(std::move(*red.contradiction));
  PhaseOne p1 = run_phase_one(cs, red);
  if (!p1.feasible) return FeasibilityOutcome(phase_one_contradiction(cs, red, p1));

  std::vector<Rational> c(p1.originals, Rational(0));
  for (std::size_t r = 0; r < p1.tableau.basis.size(); ++r) {
    if (p1.tableau.basis[r] < p1.originals) c[p1.tableau.basis[r]] = p1.tableau.b[r];
  }
  return FeasibilityOutcome(WeightCertificate(std::move(c)));
}

std::optional<Rational> max_weight(const ConstraintSystem& cs, int index) {
  if (index < 0 || index > cs.n) throw std::out_of_range("weight index out of range");
  Reduction red = eliminate(cs);
  if (red.contradiction) return std::nullopt;
  PhaseOne p1 = run_phase_one(cs, red);
  if (!p1.feasible) return std::nullopt;

  auto& t = p1.tableau;
  // Artificials still basic sit at level 0; rows are independent, so each
  // such row has a nonzero original column to pivot on.
  for (std::size_t r = 0; r < t.basis.size(); ++r) {
    if (t.basis[r] < p1.originals) continue;
    for (std::size_t j = 0; j < p1.originals; ++j) {
      if (t.a[r][j] != 0) {
        t.pivot(r, j);
        break;
      }
    }
    if (t.basis[r] >= p1.originals) throw std::logic_error("dependent row survived elimination");
  }
  std::vector<bool> allowed(t.a.empty() ? p1.originals : t.a.front().size(), false);
  std::fill(allowed.begin(), allowed.begin() + static_cast<std::ptrdiff_t>(p1.originals), true);
  Row cost(allowed.size(), Rational(0));
  cost[static_cast<std::size_t>(index)] = -1;
  if (!t.minimize(cost, allowed, nullptr)) throw std::logic_error("weight unbounded on simplex");
  return -t.objective(cost);
}

std::vector<int> support_union(const ConstraintSystem& cs) {
  std::vector<int> out;
  for (int i = 0; i <= cs.n; ++i) {
    const auto m = max_weight(cs, i);
    if (m && *m > 0) out.push_back(i);
  }
  return out;
}

bool verify_certificate(const PartialBooleanFunction& f, const WeightCertificate& c) {
  if (f.arity() != c.arity()) {
    throw DimensionError("function has n = " + std::to_string(f.arity()) +
                         ", certificate has n = " + std::to_string(c.arity()));
  }
  Rational sum = 0;
  for (const auto& w : c.weights()) {
    if (w < 0) return false;
    sum += w;
  }
  if (sum != 1) return false;

  const Rational half(1, 2);
  const auto ones = f.inputs_with(true);
  const auto zeros = f.inputs_with(false);
  for (const auto& x : ones) {
    for (const auto& y : zeros) {
      Rational weight = 0;
      for (int i = 1; i <= f.arity(); ++i) {
        if (x.bit(i) != y.bit(i)) weight += c[i];
      }
      if (weight != half) return false;
    }
  }
  return true;
}

}  // namespace oneq
