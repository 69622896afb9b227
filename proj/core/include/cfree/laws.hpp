#pragma once

#include <string>

#include "cfree/cumulant.hpp"
#include "cfree/jacobi.hpp"

namespace cfree {

/// A pair (mu, nu) of measures held in both representations: Jacobi data
/// for each state and the cumulant sequences (R from phi, r from psi).
/// The working order is even so the two representations determine each
/// other exactly on the stored range.
struct TwoStateLaw {
  std::string name;
  JacobiParams muJacobi;
  JacobiParams nuJacobi;
  VariableSpec cumulants;
  int order = 0;

  std::vector<Rational> mu_moments(int order) const;
  std::vector<Rational> nu_moments(int order) const;
};

/// Builds the dual representation from Jacobi data (moments, then the
/// triangular cumulant inversion).
TwoStateLaw law_from_jacobi(JacobiParams mu, JacobiParams nu, int order,
                            std::string name = "X");

/// Builds the dual representation from cumulant sequences (moments via the
/// partition tables, then Stieltjes).
TwoStateLaw law_from_cumulants(VariableSpec cumulants, int order);

/// The two-state normal pair: mu has Jacobi (a,0,0,..; b,1,1,..), nu is
/// the standard semicircle, cumulants R = (a,b,0,..), r = (0,1,0,..).
/// Requires b > 0.
TwoStateLaw two_state_normal(const Rational& a, const Rational& b, int order);

/// The free Meixner classes of mu_{a,b}, mutually exclusive on b > 0.
enum class MeixnerClass { Wigner, FreePoisson, FreePascal, FreeGamma, PureFreeMeixner, FreeBinomial };

MeixnerClass classify_meixner(const Rational& a, const Rational& b);
std::string to_string(MeixnerClass c);

/// Free convolution of single measures: add free cumulants, re-express as
/// Jacobi data.
JacobiParams free_convolve(const JacobiParams& nu1, const JacobiParams& nu2, int order);

/// Conditionally free convolution of pairs: nu by free cumulant addition,
/// mu by two-state cumulant addition.
TwoStateLaw cfree_convolve(const TwoStateLaw& l1, const TwoStateLaw& l2, int order);

/// Conditionally free power of a two-state normal pair (the only scope in
/// which the power is used here): scales both cumulant sequences by t.
/// Requires t >= 0 and a two-state normal input.
TwoStateLaw cfree_power(const TwoStateLaw& l, const Rational& t, int order);

}  // namespace cfree
