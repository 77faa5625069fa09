#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphfol {

// Expression templates off so values mix freely with std algorithms.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                          boost::multiprecision::et_off>;

// Raised for malformed user input (manifests, CLI arguments).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// n/d for any nonzero d; the two-argument Rat constructor rejects d < 0.
Rat ratio(const Int& n, const Int& d);

Int numer(const Rat& q);
Int denom(const Rat& q);
Int floor_of(const Rat& q);
Int ceil_of(const Rat& q);
Rat frac_of(const Rat& q);  // q - floor(q), lies in [0, 1)
bool is_integral(const Rat& q);
Int gcd_of(const Int& a, const Int& b);  // non-negative
Int lcm_of(const Int& a, const Int& b);

// Accepts "p", "p/q", "-p/q"; throws InputError otherwise.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& q);
std::string to_string(const Int& z);
Int parse_int(const std::string& text);

// The slope [p*h + q*h*] on a boundary torus with basis (fibre h, dual h*).
// Stored primitive with q > 0, or q == 0 and p == 1.
class Slope {
 public:
  Slope(Int h_coeff, Int dual_coeff);
  static Slope vertical() { return Slope(1, 0); }
  static Slope of_tau(const Rat& tau);  // [tau*h - h*] up to sign
  static Slope parse(const std::string& text);  // "[p,q]"

  const Int& h_coeff() const { return h_; }
  const Int& dual_coeff() const { return d_; }
  bool is_vertical() const { return d_ == 0; }
  // nullopt encodes the vertical slope.
  std::optional<Rat> tau() const;
  std::string str() const;

  friend bool operator==(const Slope& a, const Slope& b) { return a.h_ == b.h_ && a.d_ == b.d_; }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
  friend bool operator<(const Slope& a, const Slope& b) {
    return a.d_ != b.d_ ? a.d_ < b.d_ : a.h_ < b.h_;
  }

 private:
  Int h_, d_;
};

// Integer matrix with determinant +-1 acting on coordinate columns (p, q).
struct BasisChange {
  std::array<std::array<Int, 2>, 2> m{};

  BasisChange() = default;
  BasisChange(Int a, Int b, Int c, Int d);
  static BasisChange identity() { return {1, 0, 0, 1}; }
  static BasisChange parse(const std::string& text);  // "[[a,b],[c,d]]"

  Int det() const;
  BasisChange inverse() const;
  // (*this) after other: coordinates pass through other first.
  BasisChange after(const BasisChange& other) const;
  std::pair<Int, Int> apply(const Int& p, const Int& q) const;
  std::string str() const;

  friend bool operator==(const BasisChange& a, const BasisChange& b) { return a.m == b.m; }
};

Int delta(const Slope& a, const Slope& b);
Slope change_basis(const Slope& s, const BasisChange& g);
std::optional<Rat> tau_of(const Slope& s);
Slope slope_of_tau(const Rat& tau);

}  // namespace graphfol
