#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsn/number_table.hpp"
#include "gsn/scalar.hpp"

namespace gsn::cli {

/// A b-file term that is not an integer.
class NonIntegerValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// `p,k,value` with a header line; one line per stored entry.
std::string emit_csv(const NumberTable& table);
/// Inverse of emit_csv. Values may be rationals or polynomials.
NumberTable parse_csv(std::string_view text);

std::string emit_json(const NumberTable& table, const std::string& title);
NumberTable parse_json(std::string_view text);

/// Triangle with rows p and columns k; cells past the end of a row stay blank.
std::string emit_markdown(const NumberTable& table, const std::string& title);

enum class Linearization { Rows, Column, Diagonal };
Linearization parse_linearization(const std::string& text);

/// Terms of the sequence read off `table`:
///   rows:     row-major, k = 0..deg(p) for p = 0, 1, ...
///   column:   S(p, k0) starting at the first row that reaches k0
///   diagonal: S(p, deg(p) - k0), so k0 = 0 reads the last entry of each row.
/// Stops after `count` terms or when the table runs out.
std::vector<Scalar> linearize(const NumberTable& table, Linearization how, long k0, std::size_t count);

/// `index value` lines, index from 1. Throws NonIntegerValue.
std::string emit_bfile(const std::vector<Scalar>& terms);

}  // namespace gsn::cli
