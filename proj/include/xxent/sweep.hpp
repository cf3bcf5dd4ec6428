#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xxent {

enum class SweepMode { finite, bulk, asymptotic, oracle };

std::string_view to_string(SweepMode m) noexcept;
SweepMode parse_sweep_mode(std::string_view s);

/// "start:stop:steps" (inclusive, steps >= 1) or a comma-separated list.
std::vector<double> parse_values(std::string_view text);
std::vector<int> parse_separations(std::string_view text);

struct SweepRequest {
  SweepMode mode = SweepMode::finite;
  std::optional<int> n;  // absent for bulk
  double v = 1.0;
  std::vector<double> b;
  std::vector<double> T;
  std::vector<int> L;
  bool units_of_v = false;  // b and T given in units of |v|
};

/// One row. b and T are echoed in the request's units.
struct SweepRow {
  SweepMode mode;
  std::optional<int> n;
  double v, b, T;
  int L;
  double C, E, p_plus, p_mid, p_minus, alpha;
  std::string flags;
};

/// Evaluates every (b, T, L) point, rows ordered lexicographically in
/// (b, T, L). Points run on `threads` workers (0 = hardware concurrency).
/// Throws InvalidArgument for a malformed request and NumericalError when
/// a point cannot be evaluated.
std::vector<SweepRow> run_sweep(const SweepRequest& request, unsigned threads = 0);

extern const char* const kSweepCsvHeader;

/// "%.15g", with "nan"/"inf"/"-inf" for non-finite values.
std::string format_number(double x);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);

/// Random cross-check of the thermal core against exact diagonalization.
struct OracleReport {
  int n;
  std::uint64_t seed;
  int points;
  double max_abs_diff;
  double tolerance;
  bool passed() const noexcept { return max_abs_diff <= tolerance; }
};

OracleReport oracle_check(int n, std::uint64_t seed, int points, double tolerance = 1e-8);

}  // namespace xxent
