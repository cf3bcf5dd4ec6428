#include "xxent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <random>
#include <thread>

#include <json.hpp>

#include "xxent/asymptotics.hpp"
#include "xxent/bulk.hpp"
#include "xxent/ed_oracle.hpp"
#include "xxent/errors.hpp"
#include "xxent/ground_state.hpp"
#include "xxent/thermal_core.hpp"

namespace xxent {

const char* const kSweepCsvHeader = "mode,n,v,b,T,L,C,E,p_plus,p_mid,p_minus,alpha,flags";

std::string_view to_string(SweepMode m) noexcept {
  switch (m) {
    case SweepMode::finite:
      return "finite";
    case SweepMode::bulk:
      return "bulk";
    case SweepMode::asymptotic:
      return "asymptotic";
    case SweepMode::oracle:
      return "oracle";
  }
  return "unknown";
}

SweepMode parse_sweep_mode(std::string_view s) {
  for (auto m : {SweepMode::finite, SweepMode::bulk, SweepMode::asymptotic, SweepMode::oracle})
    if (s == to_string(m)) return m;
  throw InvalidArgument("unknown mode '" + std::string(s) + "'");
}

namespace {

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(x))
    throw InvalidArgument("not a finite number: '" + std::string(s) + "'");
  return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<double> parse_values(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw InvalidArgument("range must be start:stop:steps");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double steps_d = parse_double(parts[2]);
    if (steps_d < 1 || steps_d != std::floor(steps_d) || steps_d > 1e7)
      throw InvalidArgument("range steps must be a positive integer");
    const int steps = static_cast<int>(steps_d);
    if (steps == 1) return {start};
    std::vector<double> out;
    for (int i = 0; i < steps; ++i) out.push_back(start + (stop - start) * i / (steps - 1));
    return out;
  }
  std::vector<double> out;
  for (auto p : split(text, ',')) out.push_back(parse_double(p));
  return out;
}

std::vector<int> parse_separations(std::string_view text) {
  std::vector<int> out;
  for (double x : parse_values(text)) {
    if (x != std::round(x) || x < 1 || x > 1e6) throw InvalidArgument("separations must be integers >= 1");
    out.push_back(static_cast<int>(std::lround(x)));
  }
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

namespace {

struct Point {
  double b_in, t_in;  // request units
  double b, t;        // absolute
};

void validate(const SweepRequest& r) {
  if (r.b.empty() || r.T.empty() || r.L.empty()) throw InvalidArgument("empty range in request");
  if (!(std::isfinite(r.v) && r.v != 0.0)) throw InvalidArgument("coupling v must be finite and nonzero");
  if (r.mode == SweepMode::bulk) {
    if (r.n) throw InvalidArgument("bulk mode takes no n");
  } else {
    if (!r.n) throw InvalidArgument("mode " + std::string(to_string(r.mode)) + " requires n");
    if (*r.n < 2) throw InvalidArgument("ring size n must be >= 2");
    if (r.mode == SweepMode::oracle && *r.n > ed::kMaxSites)
      throw InvalidArgument("oracle mode requires n <= " + std::to_string(ed::kMaxSites));
    for (int L : r.L)
      if (L >= *r.n) throw InvalidArgument("separation must lie in [1, n-1]");
  }
  for (double t : r.T) {
    if (t < 0.0) throw InvalidArgument("temperatures must be >= 0");
    if (t == 0.0 && r.mode == SweepMode::asymptotic)
      throw InvalidArgument("asymptotic mode needs T > 0");
  }
}

SweepRow make_row(const SweepRequest& r, const Point& p, int L, const PairDensity& pd, double c,
                  std::string flags) {
  return {r.mode, r.n, r.v, p.b_in, p.t_in, L, c, entanglement_of_formation(c),
          pd.p_plus, pd.p, pd.p_minus, pd.alpha, std::move(flags)};
}

std::vector<SweepRow> evaluate_point(const SweepRequest& r, const Point& p) {
  std::vector<SweepRow> rows;
  switch (r.mode) {
    case SweepMode::finite: {
      const ChainSpec spec(*r.n, r.v, p.b);
      if (p.t == 0.0) {
        for (int L : r.L) {
          const auto pd = ground_state_pair_density(spec, L);
          rows.push_back(make_row(r, p, L, pd, concurrence(pd), ""));
        }
        break;
      }
      const ThermalState state(spec, p.t);
      for (int L : r.L) {
        const auto pd = state.pair_density(L);
        rows.push_back(make_row(r, p, L, pd, concurrence(pd), state.warnings().joined()));
      }
      break;
    }
    case SweepMode::bulk: {
      for (int L : r.L) {
        const auto pd = bulk_pair_density(L, p.t, p.b, r.v);
        rows.push_back(make_row(r, p, L, pd, concurrence(pd), ""));
      }
      break;
    }
    case SweepMode::asymptotic: {
      const ChainSpec spec(*r.n, r.v, p.b);
      const double beta = 1.0 / p.t;
      for (int L : r.L) {
        Warnings w;
        const double c = high_field_concurrence(spec, beta, L, &w);
        // first-order pair elements with g_L ~ e^{-beta|b|} I_L
        const auto s = scaled_projected_bessel(L, beta * r.v, *r.n);
        const double scale = std::exp(s.shift - beta * std::abs(p.b));
        const double g0 = scale * 0.5 * (s.zero_minus_l_plus + s.zero_plus_l_plus);
        const double p_plus = scale * scale * s.zero_minus_l_plus * s.zero_plus_l_plus;
        PairDensity pd;
        pd.p_plus = p_plus;
        pd.p_minus = std::max(0.0, 1.0 - 2.0 * g0 + p_plus);
        pd.p = 0.5 * (1.0 - pd.p_plus - pd.p_minus);
        pd.alpha = scale * std::abs(s.l_minus);
        if (p.b < 0.0) std::swap(pd.p_plus, pd.p_minus);
        rows.push_back(make_row(r, p, L, pd, std::min(c, 1.0), w.joined()));
      }
      break;
    }
    case SweepMode::oracle: {
      const ChainSpec spec(*r.n, r.v, p.b);
      const auto blocks = ed::build_blocks(spec);
      const auto state = p.t == 0.0 ? ed::ground_state(blocks, *r.n, spec.abs_v())
                                    : ed::thermal_state(blocks, *r.n, p.t);
      for (int L : r.L) {
        const auto rho = ed::reduced_pair_density(state, 0, L);
        PairDensity pd;
        pd.p_plus = rho(0, 0).real();
        pd.p = rho(1, 1).real();
        pd.p_minus = rho(3, 3).real();
        pd.alpha = rho(1, 2).real();
        rows.push_back(make_row(r, p, L, pd, ed::wootters_concurrence(rho), ""));
      }
      break;
    }
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepRequest& request, unsigned threads) {
  validate(request);
  SweepRequest sorted = request;
  std::sort(sorted.b.begin(), sorted.b.end());
  std::sort(sorted.T.begin(), sorted.T.end());
  std::sort(sorted.L.begin(), sorted.L.end());
  const double unit = request.units_of_v ? std::abs(request.v) : 1.0;
  std::vector<Point> points;
  for (double b : sorted.b)
    for (double t : sorted.T) points.push_back({b, t, b * unit, t * unit});

  std::vector<std::vector<SweepRow>> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = evaluate_point(sorted, points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<SweepRow> rows;
  for (auto& r : results)
    for (auto& row : r) rows.push_back(std::move(row));
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.mode) << ',' << (r.n ? std::to_string(*r.n) : "") << ','
        << format_number(r.v) << ',' << format_number(r.b) << ',' << format_number(r.T) << ','
        << r.L << ',' << format_number(r.C) << ',' << format_number(r.E) << ','
        << format_number(r.p_plus) << ',' << format_number(r.p_mid) << ','
        << format_number(r.p_minus) << ',' << format_number(r.alpha) << ',' << r.flags << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(r.mode);
    j["n"] = r.n ? nlohmann::ordered_json(*r.n) : nlohmann::ordered_json(nullptr);
    j["v"] = r.v;
    j["b"] = r.b;
    j["T"] = r.T;
    j["L"] = r.L;
    j["C"] = r.C;
    j["E"] = r.E;
    j["p_plus"] = r.p_plus;
    j["p_mid"] = r.p_mid;
    j["p_minus"] = r.p_minus;
    j["alpha"] = r.alpha;
    j["flags"] = r.flags;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

OracleReport oracle_check(int n, std::uint64_t seed, int points, double tolerance) {
  if (n < 2 || n > ed::kMaxSites)
    throw InvalidArgument("oracle check requires 2 <= n <= " + std::to_string(ed::kMaxSites));
  if (points < 1) throw InvalidArgument("oracle check needs at least one point");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double v = uniform() < 0.5 ? 1.0 : -1.0;
    const double b = 6.0 * uniform() - 3.0;
    const double t = 0.05 * std::exp(std::log(100.0) * uniform());
    const int L = 1 + static_cast<int>(uniform() * (n - 1));
    const ChainSpec spec(n, v, b);
    const double c_core = concurrence(pair_density(spec, t, L));
    const auto state = ed::thermal_state(ed::build_blocks(spec), n, t);
    const double c_ed = ed::wootters_concurrence(ed::reduced_pair_density(state, 0, L));
    worst = std::max(worst, std::abs(c_core - c_ed));
  }
  return {n, seed, points, worst, tolerance};
}

}  // namespace xxent
