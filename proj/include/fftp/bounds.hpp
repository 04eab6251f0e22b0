#ifndef FFTP_BOUNDS_HPP
#define FFTP_BOUNDS_HPP

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

namespace fftp {

// An isoperimetric profile rho: a monotone nondecreasing bound on the number
// of cells needed to fill a loop of given length. Quadratic is rho(s) = s^2.
// A table covers arguments 0..size-1 and refuses to extrapolate; a
// polynomial has nonnegative integer coefficients (constant term first).
class IsoProfile {
 public:
  static IsoProfile quadratic();
  static IsoProfile table(std::vector<mpz_class> values);        // throws ProfileNotMonotone
  static IsoProfile polynomial(std::vector<mpz_class> coeffs);   // throws ProfileNotMonotone

  mpz_class operator()(const mpz_class& s) const;  // throws ProfileDomainExceeded
  mpz_class operator()(long s) const { return (*this)(mpz_class(s)); }

  std::string describe() const;

 private:
  struct Quad {};
  struct Table {
    std::vector<mpz_class> values;
  };
  struct Poly {
    std::vector<mpz_class> coeffs;
  };
  std::variant<Quad, Table, Poly> kind_;
};

// Perimeter bound for a drum side cell: C + 2*eps + 1, where C bounds
// in-ball detours for sphere points at distance <= 2*eps + 1.
mpz_class side_perimeter(long eps, const mpz_class& c_val);

// The depth constant for drum bases:
//   ceil(k*(2k+2)*C / 2) + (2k+2) * rho(2k*(2k+2)*C).
// Retracting base paths this deep guarantees the final patch, filled via the
// in-ball filling bound, stays inside the shrunk ball. Verified internally:
// for every l <= (2k+2)*C, 2*M >= k*l + 2*(2k+2)*rho(2k*l).
// Requires 2*eps > k.
mpz_class drum_depth(long k, long eps, const mpz_class& c_val, const IsoProfile& rho);

// Cell budget for one drum, by category.
struct DrumBudget {
  mpz_class top;    // always 1
  mpz_class sides;  // (2k+2) * rho(C + 2eps + 1)
  mpz_class base1;  // (2k+2) * M
  mpz_class base2;  // 2M * (2M - k*(2k+2)*C)
  mpz_class base3;  // rho(2k*(2k+2)*C)

  mpz_class total() const { return top + sides + base1 + base2 + base3; }
};

// Throws NegativeBase2 if 2M < k*(2k+2)*C, which cannot happen when M comes
// from drum_depth.
DrumBudget drum_budget(long k, long eps, const mpz_class& c_val, const IsoProfile& rho,
                       const mpz_class& depth_m);

// The per-drum base-cell bound b = base1 + base2 + base3.
mpz_class base_cell_bound(long k, long eps, const mpz_class& c_val, const IsoProfile& rho,
                          const mpz_class& depth_m);

// Exact number of 3-cells sufficient to fill a 2-sphere of area N when each
// attachment multiplies area by at most b:  sum_{i=0}^{(2k+2)N} N * b^i.
// Requires N >= 1 and k >= 1 (throws ProvisoViolated: the async-to-sync
// equivalence underlying the construction needs k >= 1).
mpz_class sphere_filling_bound(long n_cells, long k, const mpz_class& b);

// Smallest valid eps for a given k: the least integer with 2*eps > k.
long default_eps(long k);

}  // namespace fftp

#endif
