#include "xxent/thermal_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "xxent/log_math.hpp"

namespace xxent {

namespace {

// Levels with |beta lambda| below this are summed exactly instead of
// entering the nu = 1 ensemble, whose occupation diverges as 1/(beta lambda).
constexpr double kSoftLevel = 1e-3;
constexpr std::size_t kMaxSoftLevels = 12;
constexpr double kNearZeroMode = 1e-6;

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw InvalidArgument("inverse temperature must be positive and finite");
}

// Level k of one parity sector, referenced to its particle-hole filled
// minimum: occupied (reference = 1) when lambda_k < 0.
struct Level {
  int twice_k;
  double scaled_gap;  // beta |lambda_k|
  bool filled;
};

std::vector<Level> sector_levels(const ChainSpec& spec, double beta, Parity sigma) {
  std::vector<Level> levels;
  for (MomentumIndex k : momentum_set(spec.n(), sigma)) {
    const double lambda = single_fermion_energy(spec, k);
    levels.push_back({k.twice(), beta * std::abs(lambda), lambda < 0.0});
  }
  return levels;
}

std::vector<std::complex<double>> phase_table(int n) {
  // e^{i pi j / n}; mirrored so that phases of +-k are exact conjugates
  std::vector<std::complex<double>> ph(static_cast<std::size_t>(2 * n));
  for (int j = 0; j <= n; ++j) ph[static_cast<std::size_t>(j)] = std::polar(1.0, std::numbers::pi * j / n);
  for (int j = n + 1; j < 2 * n; ++j)
    ph[static_cast<std::size_t>(j)] = std::conj(ph[static_cast<std::size_t>(2 * n - j)]);
  return ph;
}

std::size_t phase_index(int twice_k, int L, int n) {
  const int period = 2 * n;
  const long long j = (static_cast<long long>(twice_k) * L) % period;
  return static_cast<std::size_t>(j < 0 ? j + period : j);
}

}  // namespace

SignedLog sector_log_partition(const ChainSpec& spec, double beta, SectorKey key) {
  check_beta(beta);
  // Factors with lambda < 0 are rewritten as e^{beta|lambda|}(1 +- y), y <= 1.
  SignedLog out{1, 0.5 * beta * spec.b() * spec.n()};
  for (const Level& lv : sector_levels(spec, beta, key.sigma)) {
    const double y = std::exp(-lv.scaled_gap);
    if (lv.filled) out.log_abs += lv.scaled_gap;
    if (key.nu == 0) {
      out.log_abs += std::log1p(y);
    } else {
      if (lv.scaled_gap == 0.0) return SignedLog{};
      out.log_abs += std::log1p(-y);
      if (lv.filled) out.sign = -out.sign;
    }
  }
  return out;
}

SectorContractions sector_contractions(const ChainSpec& spec, double beta, SectorKey key,
                                       int max_separation, Warnings* warnings) {
  check_beta(beta);
  if (max_separation < 0 || max_separation > spec.n() - 1)
    throw InvalidArgument("sector_contractions: Lmax must lie in 0..n-1");
  if (key.nu != 0 && key.nu != 1) throw InvalidArgument("projector power nu must be 0 or 1");

  const auto levels = sector_levels(spec, beta, key.sigma);
  std::vector<double> occ;
  occ.reserve(levels.size());
  double min_gap = std::numeric_limits<double>::infinity();
  for (const Level& lv : levels) {
    min_gap = std::min(min_gap, lv.scaled_gap);
    const double y = std::exp(-lv.scaled_gap);
    const double r = lv.filled ? 1.0 : 0.0;
    const double toward = lv.filled ? -1.0 : 1.0;
    if (key.nu == 0) {
      occ.push_back(r + toward * y / (1.0 + y));
    } else {
      if (lv.scaled_gap == 0.0)
        throw NumericalError("nu = 1 sector is singular: a single-fermion level is exactly zero");
      occ.push_back(r - toward * y / (-std::expm1(-lv.scaled_gap)));
    }
  }
  if (key.nu == 1 && min_gap < kNearZeroMode) raise_if(warnings, "near_singular_sector");

  const int n = spec.n();
  const auto ph = phase_table(n);
  std::vector<double> g(static_cast<std::size_t>(max_separation) + 1, 0.0);
  for (int L = 0; L <= max_separation; ++L) {
    double sum = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i)
      sum += occ[i] * ph[phase_index(levels[i].twice_k, L, n)].real();
    g[static_cast<std::size_t>(L)] = sum / n;
  }
  return {key, sector_log_partition(spec, beta, key), ContractionTable<double>(std::move(g))};
}

ThermalState::ThermalState(const ChainSpec& spec, double temperature)
    : spec_(spec.with_field(std::abs(spec.b()))),
      temperature_(temperature),
      field_flipped_(spec.b() < 0.0),
      phase_(phase_table(spec.n())) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw InvalidArgument("temperature must be positive and finite");
  const double beta = 1.0 / temperature;
  const int n = spec_.n();

  std::vector<double> log_weights;
  for (Parity sigma : {Parity::plus, Parity::minus}) {
    const auto levels = sector_levels(spec_, beta, sigma);

    double log_ref = 0.5 * beta * spec_.b() * n;
    int filled = 0;
    double min_gap = std::numeric_limits<double>::infinity();
    for (const Level& lv : levels) {
      if (lv.filled) {
        log_ref += lv.scaled_gap;
        ++filled;
      }
      min_gap = std::min(min_gap, lv.scaled_gap);
    }
    if (min_gap < kNearZeroMode) warnings_.raise("near_zero_mode");
    const int parity = sign_of(sigma) * (filled % 2 == 0 ? 1 : -1);

    // soft levels: smallest gaps, summed as explicit empty/occupied branches
    std::vector<std::size_t> order(levels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return levels[a].scaled_gap < levels[b].scaled_gap;
    });
    std::vector<std::size_t> soft;
    std::vector<std::size_t> hard;
    for (std::size_t i : order) {
      if (levels[i].scaled_gap < kSoftLevel && soft.size() < kMaxSoftLevels)
        soft.push_back(i);
      else
        hard.push_back(i);
    }

    // Aggregates of the hard set; y = e^{-gap} may underflow, so the odd
    // projection is carried relative to the largest y.
    std::vector<double> occ_a(levels.size());
    std::vector<double> occ_b(levels.size());
    std::vector<double> delta(levels.size(), 0.0);
    double log_a = 0.0;
    double log_u = -std::numeric_limits<double>::infinity();  // u = 2 sum atanh y
    double u = 0.0;
    if (!hard.empty()) {
      const double min_hard = levels[hard.front()].scaled_gap;
      if (min_hard == 0.0) throw NumericalError("too many zero-energy levels in one sector");
      double scaled_sum = 0.0;  // u / y_max
      for (std::size_t i : hard) {
        const double gap = levels[i].scaled_gap;
        const double y = std::exp(-gap);
        const double z = std::exp(-(gap - min_hard));
        const double r = levels[i].filled ? 1.0 : 0.0;
        const double toward = levels[i].filled ? -1.0 : 1.0;
        log_a += std::log1p(y);
        occ_a[i] = r + toward * y / (1.0 + y);
        occ_b[i] = r - toward * y / (-std::expm1(-gap));
        scaled_sum += 2.0 * z * atanh_ratio(y);
        delta[i] = toward * 2.0 * z / (1.0 - y * y);
      }
      log_u = -min_hard + std::log(scaled_sum);
      u = log_u < 700.0 ? std::exp(log_u) : std::numeric_limits<double>::infinity();
      const double norm = scaled_sum * expm1_ratio(u);
      for (std::size_t i : hard) delta[i] /= norm;
    }

    const std::size_t branches = std::size_t{1} << soft.size();
    for (std::size_t mask = 0; mask < branches; ++mask) {
      Ensemble e{sigma, 1, 0.0, 1.0, occ_a, occ_b, {}};
      double log_w = log_ref - std::numbers::ln2;
      int flips = 0;
      for (std::size_t s = 0; s < soft.size(); ++s) {
        const std::size_t i = soft[s];
        const bool flipped = ((mask >> s) & 1U) != 0;
        const bool occupied = levels[i].filled != flipped;
        e.occ_a[i] = e.occ_b[i] = occupied ? 1.0 : 0.0;
        if (flipped) {
          log_w -= levels[i].scaled_gap;
          ++flips;
        }
      }
      const int leaf_parity = parity * (flips % 2 == 0 ? 1 : -1);

      if (hard.empty()) {
        if (leaf_parity < 0) continue;  // no state of the required parity
        log_w += std::numbers::ln2;
        e.mix = 1.0;
      } else if (leaf_parity > 0) {
        e.mix = std::exp(-u);
        log_w += log_a + std::log1p(e.mix);
      } else {
        e.excitation_parity = -1;
        e.mix = 0.0;
        e.occ_delta = delta;
        log_w += log_a + log_one_minus_exp_neg(u, log_u);
      }
      log_weights.push_back(log_w);
      leaves_.push_back(std::move(e));
    }
  }

  log_z_ = log_sum_exp(log_weights);
  if (!std::isfinite(log_z_)) throw NumericalError("partition function is not finite");
  for (std::size_t i = 0; i < leaves_.size(); ++i)
    leaves_[i].weight = std::exp(log_weights[i] - log_z_);
}

ContractionTable<std::complex<double>> ThermalState::table(Parity sigma,
                                                           const std::vector<double>& occ,
                                                           int max_separation) const {
  const int n = spec_.n();
  const auto ks = momentum_set(n, sigma);
  std::vector<std::complex<double>> g(static_cast<std::size_t>(max_separation) + 1);
  for (int L = 0; L <= max_separation; ++L) {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i)
      sum += occ[i] * phase_[phase_index(ks[i].twice(), L, n)];
    g[static_cast<std::size_t>(L)] = sum / static_cast<double>(n);
  }
  return ContractionTable<std::complex<double>>(std::move(g));
}

ThermalState::Observables ThermalState::evaluate(const Ensemble& e, int L) const {
  const auto ga = table(e.sigma, e.occ_a, L);
  const double ga0 = ga(0).real();
  const Observables a{ga0, ga0 * ga0 - std::norm(ga(L)),
                      0.5 * string_determinant(ga, L).real()};
  if (e.excitation_parity > 0 && e.occ_a == e.occ_b) return a;

  const auto gb = table(e.sigma, e.occ_b, L);
  if (e.excitation_parity > 0) {
    const double gb0 = gb(0).real();
    const Observables b{gb0, gb0 * gb0 - std::norm(gb(L)),
                        0.5 * string_determinant(gb, L).real()};
    const double q = e.mix;
    return {(a.occupation + q * b.occupation) / (1.0 + q), (a.p_plus + q * b.p_plus) / (1.0 + q),
            (a.alpha + q * b.alpha) / (1.0 + q)};
  }

  // odd projection: O = O_a + (O_a - O_b) / (A/B - 1), difference taken linearly
  const auto gd = table(e.sigma, e.occ_delta, L);
  const double docc = gd(0).real();
  const double dp = (gd(0) * std::conj(ga(0) + gb(0))).real() -
                    (gd(L) * std::conj(ga(L) + gb(L))).real();
  const double dalpha = 0.5 * string_determinant_difference(ga, gb, gd, L).real();
  return {a.occupation + docc, a.p_plus + dp, a.alpha + dalpha};
}

PairDensity ThermalState::pair_density(int L) const {
  if (L < 1 || L > spec_.n() - 1)
    throw InvalidArgument("separation L must lie in 1..n-1, got " + std::to_string(L));
  double occupation = 0.0;
  double p_plus = 0.0;
  double alpha = 0.0;
  for (const Ensemble& e : leaves_) {
    if (e.weight == 0.0) continue;
    const Observables o = evaluate(e, L);
    occupation += e.weight * o.occupation;
    p_plus += e.weight * o.p_plus;
    alpha += e.weight * o.alpha;
  }
  PairDensity pd = assemble_pair_density(occupation, p_plus, alpha);
  if (field_flipped_) std::swap(pd.p_plus, pd.p_minus);
  return pd;
}

PairDensity pair_density(const ChainSpec& spec, double temperature, int L, Warnings* warnings) {
  const ThermalState state(spec, temperature);
  if (warnings != nullptr) warnings->merge(state.warnings());
  return state.pair_density(L);
}

double log_partition_function(const ChainSpec& spec, double temperature) {
  return ThermalState(spec, temperature).log_partition();
}

}  // namespace xxent
