// xxent: concurrence sweeps, critical fields, limit temperatures and oracle
// cross-checks for the cyclic XX chain.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "xxent/asymptotics.hpp"
#include "xxent/chain_model.hpp"
#include "xxent/errors.hpp"
#include "xxent/limit_temperature.hpp"
#include "xxent/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOracle = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string mode = "finite";
  std::optional<int> n;
  double v = 1.0;
  std::string b = "0";
  std::string T = "0.05";
  std::string L = "1";
  std::string out;
  std::string format = "csv";
  std::string units = "abs";
  std::uint64_t seed = 1;
  int points = 50;
  unsigned threads = 0;
};

// Output goes to a buffer first so that failed requests never create a file.
int emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << o.out << '\n';
    return kExitInvalid;
  }
  f << text;
  return kExitOk;
}

xxent::SweepRequest make_request(const Options& o) {
  xxent::SweepRequest r;
  r.mode = xxent::parse_sweep_mode(o.mode);
  r.n = o.n;
  r.v = o.v;
  r.b = xxent::parse_values(o.b);
  r.T = xxent::parse_values(o.T);
  r.L = xxent::parse_separations(o.L);
  r.units_of_v = o.units == "v";
  return r;
}

int cmd_concurrence(const Options& o) {
  const auto rows = xxent::run_sweep(make_request(o), o.threads);
  std::ostringstream s;
  if (o.format == "json")
    xxent::write_json(s, rows);
  else
    xxent::write_csv(s, rows);
  return emit(o, s.str());
}

int cmd_critical_fields(const Options& o) {
  if (!o.n) throw xxent::InvalidArgument("critical-fields requires --n");
  const auto table = xxent::critical_fields(xxent::ChainSpec(*o.n, o.v, 0.0));
  std::ostringstream s;
  s << "N,b_N\n";
  for (int N = 1; N <= *o.n; ++N) s << N << ',' << xxent::format_number(table.at(N)) << '\n';
  return emit(o, s.str());
}

std::string t_on_list(const xxent::LimitTemperatureResult& r, double unit) {
  std::string out;
  for (const auto& iv : r.thresholds) {
    if (!out.empty()) out += ';';
    out += xxent::format_number(iv.t_on / unit);
  }
  return out;
}

int cmd_limit_temp(const Options& o) {
  const auto req = make_request(o);
  const double unit = req.units_of_v ? std::abs(req.v) : 1.0;
  std::ostringstream s;
  s << "n,v,b,L,T_limit,T_on_list,method,flags\n";
  for (double b_in : req.b) {
    for (int L : req.L) {
      const double b = b_in * unit;
      xxent::LimitTemperatureResult r;
      std::string b_col = xxent::format_number(b_in);
      switch (req.mode) {
        case xxent::SweepMode::finite:
          if (!req.n) throw xxent::InvalidArgument("finite mode requires --n");
          r = xxent::limit_temperature(xxent::ChainSpec(*req.n, req.v, b), L);
          break;
        case xxent::SweepMode::bulk:
          if (req.n) throw xxent::InvalidArgument("bulk mode takes no --n");
          r = xxent::bulk_limit_temperature_at(L, b, req.v);
          break;
        case xxent::SweepMode::asymptotic: {
          if (!req.n) throw xxent::InvalidArgument("asymptotic mode requires --n");
          const bool odd_af = *req.n % 2 == 1 && req.v < 0.0;
          r.method = xxent::LimitMethod::asymptotic_plateau;
          r.upper = xxent::plateau_limit_temperature(*req.n, req.v, L, odd_af);
          b_col = "inf";
          break;
        }
        case xxent::SweepMode::oracle:
          throw xxent::InvalidArgument("limit-temp supports finite, bulk and asymptotic modes");
      }
      s << (req.n ? std::to_string(*req.n) : "") << ',' << xxent::format_number(req.v) << ','
        << b_col << ',' << L << ',' << xxent::format_number(r.upper / unit) << ','
        << t_on_list(r, unit) << ',' << xxent::to_string(r.method) << ',' << r.warnings.joined()
        << '\n';
    }
    if (req.mode == xxent::SweepMode::asymptotic) break;
  }
  return emit(o, s.str());
}

int cmd_oracle_check(const Options& o) {
  if (!o.n) throw xxent::InvalidArgument("oracle-check requires --n");
  const auto rep = xxent::oracle_check(*o.n, o.seed, o.points);
  std::ostringstream s;
  s << "n=" << rep.n << " seed=" << rep.seed << " points=" << rep.points
    << " max_abs_diff=" << xxent::format_number(rep.max_abs_diff)
    << " tolerance=" << xxent::format_number(rep.tolerance) << ' '
    << (rep.passed() ? "PASS" : "FAIL") << '\n';
  const int code = emit(o, s.str());
  if (code != kExitOk) return code;
  return rep.passed() ? kExitOk : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise entanglement of the cyclic XX chain"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* c) {
    c->add_option("--n", o.n, "ring size");
    c->add_option("--v", o.v, "coupling");
    c->add_option("--out", o.out, "output path (default stdout)");
    c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_grid = [&o](CLI::App* c) {
    c->add_option("--mode", o.mode, "finite, bulk, asymptotic or oracle");
    c->add_option("--b", o.b, "fields, start:stop:steps or a,b,c");
    c->add_option("--T", o.T, "temperatures, start:stop:steps or a,b,c");
    c->add_option("--L", o.L, "separations");
    c->add_option("--units", o.units, "abs or v (b and T in units of |v|)")
        ->check(CLI::IsMember({"abs", "v"}));
    c->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  };

  auto* conc = app.add_subcommand("concurrence", "pair density and concurrence over a grid");
  add_common(conc);
  add_grid(conc);
  auto* crit = app.add_subcommand("critical-fields", "ground-state transition fields b_N");
  add_common(crit);
  auto* lim = app.add_subcommand("limit-temp", "limit temperatures T_L(b) and thresholds");
  add_common(lim);
  add_grid(lim);
  auto* orc = app.add_subcommand("oracle-check", "random comparison against exact diagonalization");
  add_common(orc);
  orc->add_option("--seed", o.seed, "random seed");
  orc->add_option("--points", o.points, "number of random points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*conc) return cmd_concurrence(o);
    if (*crit) return cmd_critical_fields(o);
    if (*lim) return cmd_limit_temp(o);
    if (*orc) return cmd_oracle_check(o);
  } catch (const xxent::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const xxent::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInvalid;
}
