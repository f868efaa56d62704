#include "apolar/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "apolar/error.hpp"

namespace apolar {

namespace {

using Clock = std::chrono::steady_clock;

constexpr unsigned kMaxN = 64;
// Attempts per trial before a hypothesis is declared unrealizable.
constexpr unsigned kMaxAttempts = 200;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ParameterOutOfRange, what);
}

SplittingType expected_shape(std::initializer_list<std::pair<int, unsigned>> parts) {
  SplittingType out;
  for (auto [value, count] : parts) out.insert(out.end(), count, value);
  std::sort(out.rbegin(), out.rend());
  return out;
}

void bump(nlohmann::ordered_json& hist, const std::string& key) {
  if (!hist.contains(key)) hist[key] = 0;
  hist[key] = hist[key].get<unsigned>() + 1;
}

// Outcome of one attempt at a trial. `realized` false means the sampled object
// failed the hypothesis and the attempt is redrawn.
struct Attempt {
  bool realized = false;
  bool pass = false;
  Counterexample detail;
  std::optional<SplittingType> splitting;
};

using TrialFn = std::function<Attempt(Sampler&, unsigned trial)>;

BinaryForm random_form(unsigned n, Sampler& rng, unsigned height) {
  const auto h = static_cast<std::int64_t>(height);
  RVector c(n + 1);
  for (auto& x : c) x = Rational(rng.uniform(-h, h));
  return BinaryForm(std::move(c));
}

Rational nonzero(Sampler& rng, std::int64_t h) {
  std::int64_t v = 0;
  while (v == 0) v = rng.uniform(-h, h);
  return Rational(v);
}

// Center in the span of `s` sampled curve points with the exclusion that no
// smaller secant space contains it, as certified by the secancy profile.
std::optional<ProjectionCenter> secant_hypothesis(unsigned n, unsigned k, unsigned s, Sampler& rng,
                                                  unsigned height) {
  try {
    auto params = sample_params(s, rng, height);
    auto combo = random_combo(k, s, rng);
    ProjectionCenter L = secant_center(params, n, combo);
    auto prof = secancy_profile(L);
    if (prof.min_degree != s || prof.witness_squarefree != Certificate::yes || !prof.witness_splits)
      return std::nullopt;
    return L;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidCenter || e.code() == ErrorCode::RankDeficientCombo ||
        e.code() == ErrorCode::RepeatedParams)
      return std::nullopt;
    throw;
  }
}

Attempt compare_splitting(const ProjectionCenter& L, Bundle which, const SplittingType& expected) {
  Attempt a;
  a.realized = true;
  a.detail.payload = format_center(L);
  a.detail.expected = format_splitting(expected);
  try {
    auto got = bundle_splitting(L, which);
    a.detail.computed = format_splitting(got);
    a.pass = got == expected;
    a.splitting = std::move(got);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateMap) throw;
    a.detail.computed = "DegenerateMap";
  }
  return a;
}

// ---- point projection -------------------------------------------------------

TrialFn point_trial(unsigned n, unsigned height, nlohmann::ordered_json& resolved) {
  resolved["special_secant_points"] = 0;
  resolved["special_tangent_points"] = 0;
  resolved["special_degenerate"] = 0;
  resolved["special_differs"] = 0;
  const auto expected = expected_shape({{int(n) + 3, 2}, {int(n) + 2, n - 4}});
  return [n, height, expected, &resolved](Sampler& rng, unsigned trial) {
    Attempt a;
    BinaryForm f = random_form(n, rng, height);
    if (f.is_zero() || length(f) < 3) return a;
    a = compare_splitting(ProjectionCenter({f}), Bundle::normal, expected);

    // A point on a secant or tangent line must not give the generic splitting.
    auto params = sample_params(2, rng, height);
    BinaryForm special;
    const bool tangent = trial % 2 == 1;
    if (tangent) {
      BinaryForm m = veronese(params[1], 1);
      special = veronese(params[0], n - 1) * m;
    } else {
      special = nonzero(rng, 9) * veronese(params[0], n) + nonzero(rng, 9) * veronese(params[1], n);
    }
    resolved[tangent ? "special_tangent_points" : "special_secant_points"] =
        resolved[tangent ? "special_tangent_points" : "special_secant_points"].get<unsigned>() + 1;
    ProjectionCenter P({special});
    std::string special_text;
    bool special_ok = true;
    try {
      auto got = normal_splitting(P);
      special_text = format_splitting(got);
      special_ok = got != expected;
      if (special_ok) bump(resolved, "special_differs");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateMap) throw;
      special_text = "DegenerateMap";
      bump(resolved, "special_degenerate");
    }
    if (!special_ok) {
      a.pass = false;
      a.detail.payload = format_center(P);
      a.detail.computed = special_text;
      a.detail.expected = std::string("not ") + format_splitting(expected);
    }
    return a;
  };
}

// ---- secant-space theorems ---------------------------------------------------

TrialFn secant_trial(unsigned n, unsigned k, unsigned s, Bundle which, SplittingType expected, unsigned height,
                     nlohmann::ordered_json& resolved) {
  resolved["secant_points"] = s;
  resolved["rank_at_twist_zero"] = nlohmann::ordered_json::object();
  return [=, &resolved](Sampler& rng, unsigned) {
    auto L = secant_hypothesis(n, k, s, rng, height);
    if (!L) return Attempt{};
    bump(resolved["rank_at_twist_zero"], std::to_string(rank_at_twist_zero(*L, which)));
    return compare_splitting(*L, which, expected);
  };
}

// The top normal summand is recorded as observed; the two published values
// n+1+2k and n+2+2k are tallied separately.
TrialFn mainresult_trial(unsigned n, unsigned k, unsigned height, nlohmann::ordered_json& resolved) {
  const int forced = int(n) + 2 + 2 * int(k);
  const int stated = int(n) + 1 + 2 * int(k);
  resolved["secant_points"] = k + 2;
  resolved["top_degree_forced"] = forced;
  resolved["top_degree_stated"] = stated;
  resolved["top_degree_observed"] = nlohmann::ordered_json::object();
  resolved["matched_forced"] = 0;
  resolved["matched_stated"] = 0;
  resolved["rank_at_twist_zero"] = nlohmann::ordered_json::object();
  const auto expected = expected_shape({{forced, 1}, {int(n) + 2, n - k - 2}});
  return [=, &resolved](Sampler& rng, unsigned) {
    auto L = secant_hypothesis(n, k, k + 2, rng, height);
    if (!L) return Attempt{};
    bump(resolved["rank_at_twist_zero"], std::to_string(rank_at_twist_zero(*L, Bundle::normal)));
    Attempt a = compare_splitting(*L, Bundle::normal, expected);
    if (a.splitting) {
      const auto& got = *a.splitting;
      bump(resolved["top_degree_observed"], std::to_string(got.front()));
      const auto base = std::count(got.begin(), got.end(), int(n) + 2);
      if (base == long(n - k - 2) && got.size() == n - k - 1) {
        if (got.front() == forced) bump(resolved, "matched_forced");
        if (got.front() == stated) bump(resolved, "matched_stated");
      }
    }
    return a;
  };
}

// ---- apolar ideal structure --------------------------------------------------

std::vector<RVector> symbol_vectors(const std::vector<DualOperator>& ops) {
  std::vector<RVector> out;
  for (const auto& op : ops) out.push_back(op.coeffs());
  return out;
}

// Random form of degree n: plain coefficients, a Waring sum, or a GAD with
// higher multiplicities. Returns the construction length (0 when unknown).
std::pair<BinaryForm, unsigned> ci_sample(unsigned n, Sampler& rng, unsigned height, unsigned mode) {
  const unsigned cap = (n + 1) / 2;
  if (mode == 0 || cap == 0) return {random_form(n, rng, height), 0};
  const auto total = static_cast<unsigned>(rng.uniform(1, cap));
  std::vector<unsigned> g;
  if (mode == 1) {
    g.assign(total, 1);
  } else {
    unsigned left = total;
    while (left > 0) {
      auto gi = static_cast<unsigned>(rng.uniform(1, left));
      g.push_back(gi);
      left -= gi;
    }
  }
  Gad gad;
  gad.n = n;
  auto pts = sample_params(static_cast<unsigned>(g.size()), rng, height);
  for (std::size_t i = 0; i < g.size(); ++i) {
    RVector c(g[i]);
    for (auto& x : c) x = Rational(rng.uniform(-9, 9));
    c[0] = nonzero(rng, 9);
    gad.terms.push_back({pts[i], g[i], BinaryForm(std::move(c))});
  }
  if (!gad.is_normalized()) return {BinaryForm::zero(n), 0};
  return {gad.expand(), total};
}

TrialFn ci_trial(unsigned n, unsigned height, nlohmann::ordered_json& resolved) {
  resolved["length_histogram"] = nlohmann::ordered_json::object();
  return [=, &resolved](Sampler& rng, unsigned trial) {
    Attempt a;
    auto [f, built] = ci_sample(n, rng, height, trial % 3);
    if (f.is_zero()) return a;
    a.realized = true;
    a.detail.payload = format_form(f);
    a.detail.expected = "complete intersection of degrees s, n+2-s";
    ApolarIdeal I = apolar_ideal(f);
    const unsigned s = I.s;
    bump(resolved["length_histogram"], std::to_string(s));
    std::vector<std::string> failed;
    if (I.alpha.degree() + I.beta.degree() != n + 2) failed.push_back("degree_sum");
    if (resultant(I.alpha.symbol, I.beta.symbol) == 0) failed.push_back("resultant");
    for (unsigned i = 0; i <= n + 1; ++i) {
      const unsigned want = i == n + 1 ? 0 : std::min({i + 1, s, n - i + 1});
      if (I.hilbert[i] != want) {
        failed.push_back("hilbert");
        break;
      }
    }
    if (length(f) != s) failed.push_back("length_vs_initial_degree");
    if (built != 0 && s != built) failed.push_back("length_vs_construction");
    if (2 * s <= n + 1 && apolar_space(f, s).size() != 1) failed.push_back("dim_I_s");
    for (unsigned v = s; v + s <= n + 1; ++v) {
      auto space = symbol_vectors(apolar_space(f, v));
      if (!same_span(space, multiples(I.alpha, v), v + 1)) {
        failed.push_back("I_v=" + std::to_string(v));
        break;
      }
    }
    a.pass = failed.empty();
    std::ostringstream os;
    os << "s=" << s;
    for (const auto& name : failed) os << ";failed:" << name;
    a.detail.computed = os.str();
    return a;
  };
}

// ---- Sylvester ---------------------------------------------------------------

bool classical(const Gad& g) {
  return std::all_of(g.terms.begin(), g.terms.end(), [](const GadTerm& t) { return t.g == 1; });
}

DualOperator vanishing_operator(std::span<const ProjPoint> pts) {
  HomPoly p{{Rational(1)}};
  for (const auto& q : pts) p = p * vanishing_symbol(q);
  return DualOperator{p};
}

TrialFn sylvester_odd_trial(unsigned n, unsigned height, nlohmann::ordered_json& resolved) {
  const unsigned t = (n - 1) / 2;
  resolved["alpha_split"] = 0;
  resolved["alpha_not_split"] = 0;
  return [=, &resolved](Sampler& rng, unsigned trial) {
    Attempt a;
    BinaryForm f;
    if (trial % 2 == 0) {
      f = random_form(n, rng, height);
    } else {
      auto pts = sample_params(t + 1, rng, height);
      f = BinaryForm::zero(n);
      for (const auto& p : pts) f = f + nonzero(rng, 9) * veronese(p, n);
    }
    if (f.is_zero() || length(f) != t + 1) return a;  // not a general form
    a.realized = true;
    a.detail.payload = format_form(f);
    a.detail.expected = "alpha squarefree; unique sum of " + std::to_string(t + 1) + " powers";
    ApolarIdeal I = apolar_ideal(f);
    std::vector<std::string> failed;
    if (!squarefree(I.alpha.symbol)) failed.push_back("alpha_squarefree");
    auto roots = rational_roots(I.alpha.symbol);
    if (roots.fully_split) {
      bump(resolved, "alpha_split");
      Gad g = canonical_form(f);
      if (!(g.expand() == f) || g.terms.size() != t + 1 || !classical(g)) failed.push_back("reconstruction");
    } else {
      bump(resolved, "alpha_not_split");
    }
    a.pass = failed.empty();
    a.detail.computed = failed.empty() ? "ok" : "failed:" + failed.front();
    return a;
  };
}

TrialFn sylvester_even_trial(unsigned n, unsigned height, nlohmann::ordered_json& resolved) {
  const unsigned t = n / 2;
  resolved["decompositions_exhibited"] = 0;
  return [=, &resolved](Sampler& rng, unsigned) {
    Attempt a;
    auto pts = sample_params(2 * (t + 1), rng, height);
    std::span<const ProjPoint> P(pts.data(), t + 1), Q(pts.data() + t + 1, t + 1);
    std::vector<RVector> cols;
    for (const auto& p : P) cols.push_back(veronese(p, n).coeffs());
    for (const auto& q : Q) {
      RVector v = veronese(q, n).coeffs();
      for (auto& x : v) x = -x;
      cols.push_back(std::move(v));
    }
    auto ker = kernel_basis(QMatrix::from_columns(cols, n + 1));
    if (ker.empty()) return a;
    BinaryForm f = BinaryForm::zero(n);
    for (unsigned i = 0; i <= t; ++i) f = f + ker[0][i] * veronese(P[i], n);
    if (f.is_zero() || length(f) != t + 1) return a;
    a.realized = true;
    a.detail.payload = format_form(f);
    a.detail.expected = "two distinct decompositions into " + std::to_string(t + 1) + " powers";
    Gad gp = gad_from_operator(vanishing_operator(P), f);
    Gad gq = gad_from_operator(vanishing_operator(Q), f);
    const bool ok = gp.expand() == f && gq.expand() == f && gp.terms.size() == t + 1 && gq.terms.size() == t + 1 &&
                    classical(gp) && classical(gq);
    if (ok) bump(resolved, "decompositions_exhibited");
    a.pass = ok;
    a.detail.computed = ok ? "two decompositions" : "reconstruction failed";
    return a;
  };
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"point", "rank3", "rank4", "codim3-rank4",
                                               "mainresult", "mainresultTG", "ci", "sylvester"};
  return ids;
}

VerificationReport run_verification(const std::string& theorem_id, unsigned n, unsigned k, unsigned trials,
                                    std::uint64_t seed, unsigned height) {
  if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem_id) == theorem_ids().end())
    throw Error(ErrorCode::UnsupportedTheorem, "unknown theorem id '" + theorem_id + "'");
  require(trials >= 1, "trials must be at least 1");
  require(height >= 1, "height must be at least 1");
  require(n <= kMaxN, "n is too large");

  const auto start = Clock::now();
  VerificationReport r;
  r.theorem_id = theorem_id;
  r.n = n;
  r.k = k;
  r.trials = trials;
  r.seed = seed;
  auto& res = r.resolved_values;
  const int N = int(n);

  TrialFn fn;
  if (theorem_id == "point") {
    require(k == 1 && n >= 4, "point needs k = 1 and n >= 4");
    fn = point_trial(n, height, res);
  } else if (theorem_id == "rank3") {
    require(k == 2 && n >= 5, "rank3 needs k = 2 and n >= 5");
    fn = secant_trial(n, 2, 3, Bundle::normal, expected_shape({{N + 6, 1}, {N + 2, n - 4}}), height, res);
  } else if (theorem_id == "rank4") {
    require(k == 2 && n >= 6, "rank4 needs k = 2 and n >= 6");
    fn = secant_trial(n, 2, 4, Bundle::normal, expected_shape({{N + 4, 2}, {N + 2, n - 5}}), height, res);
  } else if (theorem_id == "codim3-rank4") {
    require(k == 3 && n >= 6, "codim3-rank4 needs k = 3 and n >= 6");
    fn = secant_trial(n, 3, 4, Bundle::normal, expected_shape({{N + 8, 1}, {N + 2, n - 5}}), height, res);
  } else if (theorem_id == "mainresult") {
    require(k >= 1 && n >= 4 && n <= 3 * k + 1 && k + 3 <= n, "mainresult needs n-1 <= 3k <= 3(n-3)");
    fn = mainresult_trial(n, k, height, res);
  } else if (theorem_id == "mainresultTG") {
    require(k >= 1 && k + 3 <= n && 2 * k <= n, "mainresultTG needs 1 <= k <= n-3 and 2k <= n");
    fn = secant_trial(n, k, k + 1, Bundle::tangent, expected_shape({{N + 1 + int(k), 1}, {N + 1, n - k - 1}}),
                      height, res);
  } else if (theorem_id == "ci") {
    require(n >= 1, "ci needs n >= 1");
    fn = ci_trial(n, height, res);
  } else {
    require(n >= 2, "sylvester needs n >= 2");
    fn = n % 2 == 1 ? sylvester_odd_trial(n, height, res) : sylvester_even_trial(n, height, res);
  }

  unsigned redrawn = 0;
  for (unsigned trial = 0; trial < trials; ++trial) {
    const auto trial_seed = derive_seed(seed, trial);
    Attempt a;
    for (unsigned attempt = 0; attempt < kMaxAttempts && !a.realized; ++attempt) {
      Sampler rng(derive_seed(trial_seed, attempt));
      a = fn(rng, trial);
      if (!a.realized) ++redrawn;
    }
    if (!a.realized) {
      a.detail = {"", "hypothesis not realized in " + std::to_string(kMaxAttempts) + " attempts", "realizable"};
    }
    if (a.pass) {
      ++r.passes;
    } else {
      r.counterexamples.push_back(std::move(a.detail));
    }
  }
  res["resampled"] = redrawn;
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool omit_timing) {
  nlohmann::ordered_json j;
  j["theorem_id"] = r.theorem_id;
  j["n"] = r.n;
  j["k"] = r.k;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples)
    j["counterexamples"].push_back({{"payload", c.payload}, {"computed", c.computed}, {"expected", c.expected}});
  j["resolved_values"] = r.resolved_values;
  j["seed"] = r.seed;
  j["wall_time_ms"] = omit_timing ? 0 : r.wall_time_ms;
  return j;
}

// ---- sweeps --------------------------------------------------------------------

ProjectionCenter random_center(unsigned n, unsigned k, Sampler& rng, unsigned height) {
  for (unsigned attempt = 0;; ++attempt) {
    std::vector<BinaryForm> gens;
    for (unsigned i = 0; i < k; ++i) gens.push_back(random_form(n, rng, height));
    try {
      return ProjectionCenter(std::move(gens));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidCenter || attempt + 1 >= kMaxAttempts) throw;
    }
  }
}

SweepReport run_sweep(unsigned n, unsigned k, unsigned trials, std::uint64_t seed, unsigned height,
                      unsigned secant) {
  require(trials >= 1, "trials must be at least 1");
  require(n >= 4 && n <= kMaxN && k >= 1 && k + 3 <= n, "sweep needs n >= 4 and 1 <= k <= n-3");
  require(secant == 0 || (secant >= k && secant <= n), "secant size must satisfy k <= s <= n");
  require(height >= 1, "height must be at least 1");

  const auto start = Clock::now();
  SweepReport r;
  r.n = n;
  r.k = k;
  r.trials = trials;
  r.secant = secant;
  r.seed = seed;
  const bool classify = k == 2 && n >= 7;

  for (unsigned trial = 0; trial < trials; ++trial) {
    const auto trial_seed = derive_seed(seed, trial);
    for (unsigned attempt = 0;; ++attempt) {
      if (attempt >= kMaxAttempts)
        throw Error(ErrorCode::DegenerateMap, "no admissible center found for trial " + std::to_string(trial));
      Sampler rng(derive_seed(trial_seed, attempt));
      std::optional<ProjectionCenter> L;
      try {
        L = secant == 0 ? random_center(n, k, rng, height)
                        : secant_center(sample_params(secant, rng, height), n, random_combo(k, secant, rng));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidCenter || e.code() == ErrorCode::RankDeficientCombo) continue;
        throw;
      }
      SplittingType split;
      try {
        split = normal_splitting(*L);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateMap) throw;
        ++r.rejected;
        continue;
      }
      const auto text = format_splitting(split);
      ++r.splittings[text];
      if (classify) {
        const auto from_split = codim2_class_of(split, n);
        const auto label = classify_codim2(*L);
        ++r.classes[to_string(label)];
        if (label != from_split)
          r.disagreements.push_back({format_center(*L), text + " (" + to_string(from_split) + ")", to_string(label)});
      }
      break;
    }
  }
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

nlohmann::ordered_json to_json(const SweepReport& r, bool omit_timing) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["trials"] = r.trials;
  j["secant"] = r.secant;
  j["seed"] = r.seed;
  j["rejected"] = r.rejected;
  j["splittings"] = nlohmann::ordered_json::object();
  for (const auto& [s, c] : r.splittings) j["splittings"][s] = c;
  j["classes"] = nlohmann::ordered_json::object();
  for (const auto& [s, c] : r.classes) j["classes"][s] = c;
  j["disagreements"] = nlohmann::ordered_json::array();
  for (const auto& d : r.disagreements)
    j["disagreements"].push_back({{"payload", d.payload}, {"computed", d.computed}, {"expected", d.expected}});
  j["wall_time_ms"] = omit_timing ? 0 : r.wall_time_ms;
  return j;
}

std::string to_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "splitting,count";
  const bool classes = !r.classes.empty();
  if (classes) os << ",class";
  os << "\n";
  for (const auto& [s, c] : r.splittings) {
    os << '"' << s << "\"," << c;
    if (classes) {
      std::vector<int> split;
      std::istringstream is(s);
      std::string tok;
      while (std::getline(is, tok, ',')) split.push_back(std::stoi(tok));
      os << ',' << to_string(codim2_class_of(split, r.n));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace apolar
