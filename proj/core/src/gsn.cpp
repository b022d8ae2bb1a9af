#include "gsn/gsn.hpp"

#include <stdexcept>
#include <string>

#include "gsn/exact.hpp"

namespace gsn {

namespace {

Scalar signed_term(long j, Scalar term) { return j % 2 == 0 ? term : -term; }

/// f(0), ..., f(last) for the product of the family.
std::vector<Scalar> product_values(const ParamSpec& params, long last) {
  std::vector<Scalar> out;
  for (long n = 0; n <= last; ++n) out.push_back(product_value(params, Scalar(n)));
  return out;
}

void require_index(const ParamSpec& params, long index, const char* what) {
  if (index < 0 || index > static_cast<long>(params.degree()))
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(index) + " outside 0.." +
                            std::to_string(params.degree()));
}

void require_length(const ParamSpec& params, std::size_t size) {
  if (size != params.degree() + 1)
    throw std::invalid_argument("row length " + std::to_string(size) + " does not match degree " +
                                std::to_string(params.degree()));
}

}  // namespace

Scalar product_value(const ParamSpec& params, const Scalar& n) {
  Scalar v = power_scalar(binom_scalar(params.a() * n + params.b(), params.r()), params.p());
  for (const auto& f : params.factors()) v *= power_scalar(binom_scalar(f.alpha * n + f.beta, f.r), f.p);
  return v;
}

Scalar gen_explicit(const ParamSpec& params, long i) {
  const long d = params.degree();
  if (i < 0 || i > d) return Scalar(0);
  const auto f = product_values(params, i);
  Scalar sum(0);
  for (long j = 0; j <= i; ++j) sum += signed_term(j, Scalar(binom_int(d + 1, j)) * f[i - j]);
  return sum;
}

std::vector<Scalar> gen_row(const ParamSpec& params) {
  const long d = params.degree();
  const auto f = product_values(params, d);
  std::vector<Scalar> row;
  for (long i = 0; i <= d; ++i) {
    Scalar sum(0);
    for (long j = 0; j <= i; ++j) sum += signed_term(j, Scalar(binom_int(d + 1, j)) * f[i - j]);
    row.push_back(std::move(sum));
  }
  return row;
}

bool verify_gen_expansion(const ParamSpec& params) {
  const long d = params.degree();
  const auto gen = gen_row(params);
  const auto f = product_values(params, d);
  for (long n = 0; n <= d; ++n) {
    Scalar rhs(0);
    for (long i = 0; i <= d; ++i) rhs += gen[i] * Scalar(binom_int(n + d - i, d));
    if (!(rhs == f[n])) return false;
  }
  return true;
}

Scalar gsn_explicit(const ParamSpec& params, long k) {
  if (k < 0 || k > static_cast<long>(params.degree())) return Scalar(0);
  const auto f = product_values(params, k);
  Scalar sum(0);
  for (long j = 0; j <= k; ++j) sum += signed_term(j, Scalar(binom_int(k, j)) * f[k - j]);
  return sum * Scalar(params.scale() / factorial(static_cast<unsigned>(k)));
}

std::vector<Scalar> gsn_row(const ParamSpec& params) {
  const long d = params.degree();
  const auto f = product_values(params, d);
  const Rational scale = params.scale();
  std::vector<Scalar> row;
  for (long k = 0; k <= d; ++k) {
    Scalar sum(0);
    for (long j = 0; j <= k; ++j) sum += signed_term(j, Scalar(binom_int(k, j)) * f[k - j]);
    row.push_back(sum * Scalar(scale / factorial(static_cast<unsigned>(k))));
  }
  return row;
}

bool verify_gsn_expansion(const ParamSpec& params) {
  const long d = params.degree();
  const auto gsn = gsn_row(params);
  const auto f = product_values(params, d);
  const Scalar inv_scale(params.scale().inverse());
  for (long n = 0; n <= d; ++n) {
    Scalar rhs(0);
    for (long k = 0; k <= d; ++k)
      rhs += Scalar(factorial(static_cast<unsigned>(k)) * binom_int(n, k)) * gsn[k];
    if (!(rhs * inv_scale == f[n])) return false;
  }
  return true;
}

std::vector<Scalar> convert_gen_to_gsn(const ParamSpec& params, std::span<const Scalar> gen) {
  require_length(params, gen.size());
  const long d = params.degree();
  const Rational scale = params.scale();
  std::vector<Scalar> out;
  for (long k = 0; k <= d; ++k) {
    Scalar sum(0);
    for (long i = 0; i <= d; ++i) sum += Scalar(binom_int(d - i, d - k)) * gen[i];
    out.push_back(sum * Scalar(scale / factorial(static_cast<unsigned>(k))));
  }
  return out;
}

std::vector<Scalar> convert_gsn_to_gen(const ParamSpec& params, std::span<const Scalar> gsn) {
  require_length(params, gsn.size());
  const long d = params.degree();
  const Rational inv_scale = params.scale().inverse();
  std::vector<Scalar> out;
  for (long i = 0; i <= d; ++i) {
    Scalar sum(0);
    for (long k = 0; k <= d; ++k)
      sum += signed_term(k, Scalar(binom_int(d - k, d - i) * factorial(static_cast<unsigned>(k))) * gsn[k]);
    out.push_back(signed_term(i, sum * Scalar(inv_scale)));
  }
  return out;
}

Scalar gsn_from_gen(const ParamSpec& params, long k) {
  require_index(params, k, "gsn_from_gen");
  const auto gen = gen_row(params);
  return convert_gen_to_gsn(params, gen)[static_cast<std::size_t>(k)];
}

Scalar gen_from_gsn(const ParamSpec& params, long i) {
  require_index(params, i, "gen_from_gsn");
  const auto gsn = gsn_row(params);
  return convert_gsn_to_gen(params, gsn)[static_cast<std::size_t>(i)];
}

std::vector<Scalar> gep_zm1_from_gsn(const ParamSpec& params) {
  const auto gsn = gsn_row(params);
  const Rational inv_scale = params.scale().inverse();
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < gsn.size(); ++k)
    out.push_back(gsn[k] * Scalar(factorial(static_cast<unsigned>(k)) * inv_scale));
  return out;
}

GepPolynomial gep(const ParamSpec& params) {
  GepPolynomial g{params, gen_row(params), std::nullopt};
  const std::size_t d = params.degree();
  std::vector<Scalar> ascending(g.coeffs_z.rbegin(), g.coeffs_z.rend());
  const auto shifted = rebase_z_to_zm1(std::span<const Scalar>(ascending));
  std::vector<Scalar> zm1(shifted.rbegin(), shifted.rend());
  const auto expected = gep_zm1_from_gsn(params);
  for (std::size_t k = 0; k <= d; ++k)
    if (!(zm1[k] == expected[k]))
      throw std::logic_error("gep: (z-1)-basis coefficient " + std::to_string(k) + " is " + zm1[k].to_string() +
                             ", GSN form gives " + expected[k].to_string());
  g.coeffs_zm1 = std::move(zm1);
  return g;
}

BoundaryValues boundary_values(const ParamSpec& params) {
  const Scalar rf(factorial(params.r()));
  Scalar first = power_scalar(rf * binom_scalar(params.b(), params.r()), params.p());
  Scalar at_one = power_scalar(rf * binom_scalar(params.a() + params.b(), params.r()), params.p());
  Scalar last = power_scalar(params.a(), params.r() * params.p());
  for (const auto& f : params.factors()) {
    const Scalar fr(factorial(f.r));
    first *= power_scalar(fr * binom_scalar(f.beta, f.r), f.p);
    at_one *= power_scalar(fr * binom_scalar(f.alpha + f.beta, f.r), f.p);
    last *= power_scalar(f.alpha, f.r * f.p);
  }
  return {first, at_one - first, last};
}

NumberTable gsn_table(const ParamSpec& family, unsigned last_row, Route route) {
  if (route == Route::Recurrence) throw std::invalid_argument("gsn_table: use recurrence_51_rows or triangle");
  NumberTable table{TableKind::GSN, family.with_p(last_row), {}, route};
  for (unsigned p = 0; p <= last_row; ++p) {
    const ParamSpec ps = family.with_p(p);
    if (route == Route::Explicit)
      table.rows.push_back(gsn_row(ps));
    else
      table.rows.push_back(convert_gen_to_gsn(ps, gen_row(ps)));
  }
  return table;
}

NumberTable gen_table(const ParamSpec& family, unsigned last_row) {
  NumberTable table{TableKind::GEN, family.with_p(last_row), {}, Route::Explicit};
  for (unsigned p = 0; p <= last_row; ++p) table.rows.push_back(gen_row(family.with_p(p)));
  return table;
}

}  // namespace gsn
