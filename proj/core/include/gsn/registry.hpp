#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsn/scalar.hpp"

namespace gsn {

enum class Mode { Numeric, Symbolic };
std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Ranges for the identity drivers. Every driver also runs its smallest
/// base cases, so all-zero bounds still exercise each identity.
struct Bounds {
  unsigned max_p = 5;            // p, p1, p2, q1, q2 and similar indices
  unsigned max_degree = 10;      // cap on the degree sum of a single number
  unsigned max_aux = 3;          // m, t, mu, shift n
  unsigned max_power_sum_m = 12; // m in the power-sum identity and its examples
  unsigned param_points = 8;     // coefficient points (numeric mode)
  std::optional<Scalar> b;       // restricts the Weyl identities to one b
  std::optional<unsigned> r;     // restricts the Weyl identities to one r
  std::optional<std::uint64_t> seed;
  unsigned random_points = 0;    // extra seeded coefficient points

  static Bounds numeric_defaults() { return {}; }
  static Bounds symbolic_defaults();
  static Bounds zero();
  /// Largest rp + sigma any driver may build under these bounds.
  unsigned required_degree() const;
  std::string describe() const;
};

struct Failure {
  std::string assignment;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string id;
  Mode mode = Mode::Numeric;
  std::string grid;
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  std::chrono::nanoseconds wall_time{0};

  bool passed() const noexcept { return failures.empty(); }
};

/// Collects case outcomes inside a driver.
class CaseSink {
 public:
  void check(const Scalar& lhs, const Scalar& rhs, const std::function<std::string()>& assignment);
  void check(bool ok, const std::function<std::string()>& assignment);
  std::uint64_t cases() const noexcept { return cases_; }
  std::vector<Failure>& failures() noexcept { return failures_; }

 private:
  std::uint64_t cases_ = 0;
  std::vector<Failure> failures_;
};

struct DriverContext {
  Mode mode;
  const Bounds& bounds;
};

using Driver = std::function<std::string(const DriverContext&, CaseSink&)>;

struct IdentityCheck {
  std::string id;
  std::string description;
  std::vector<std::string> arity;
  bool numeric = true;
  bool symbolic = false;
  Driver driver;

  bool supports(Mode mode) const noexcept { return mode == Mode::Numeric ? numeric : symbolic; }
};

/// All registered identities in catalog order.
const std::vector<IdentityCheck>& registry();
const IdentityCheck* find_identity(std::string_view id);

/// Runs one identity. Throws UnknownIdentity for an unregistered id,
/// DegreeGuardError when the bounds need more than `degree_guard`, and
/// std::invalid_argument when the identity has no driver for `mode`.
VerifyReport run_identity(std::string_view id, Mode mode, const Bounds& bounds, unsigned degree_guard = 64);

/// Runs every identity that supports `mode`, `threads` at a time.
/// Reports come back in registry order.
std::vector<VerifyReport> run_all(Mode mode, const Bounds& bounds, unsigned degree_guard = 64,
                                  unsigned threads = 1);

/// JSON with a fixed key order; wall time is included only on request.
std::string report_json(const std::vector<VerifyReport>& reports, bool include_timing = false);
std::string report_text(const std::vector<VerifyReport>& reports, bool include_timing = false);

}  // namespace gsn
