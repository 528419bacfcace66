// Kauffman bracket and Jones polynomial.
#pragma once

#include <stdexcept>

#include "lensball/diagram.hpp"
#include "lensball/laurent.hpp"

namespace lensball {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultCrossingCap = 24;

/// Crossing cap for exact bracket evaluation; LENSBALL_CAP overrides the default.
int bracket_cap();

/// Throws CapExceeded when d has more crossings than the cap.
void check_cap(const PDCode& d);

/// <D> in the variable A, normalised so that a crossingless loop is 1.
/// Memoised sweep over boundary matchings.
LaurentPoly kauffman_bracket(const PDCode& d);

/// Plain sum over all 2^n states, one state at a time.
LaurentPoly bracket_state_sum_serial(const PDCode& d);
/// The same state sum split across OpenMP threads.
LaurentPoly bracket_state_sum_parallel(const PDCode& d);

/// Jones polynomial in t with exponents doubled (t^(1/2) -> exponent 1).
LaurentPoly jones(const PDCode& d);
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

/// (-t^(1/2) - t^(-1/2))^(n-1), doubled exponents.
LaurentPoly unlink_jones(int n);

/// Formats a doubled-exponent Jones polynomial in t.
std::string jones_string(const LaurentPoly& v);

}  // namespace lensball
