#include "graphfol/exactnum.hpp"

#include <cctype>

namespace graphfol {

Int numer(const Rat& q) { return boost::multiprecision::numerator(q); }
Int denom(const Rat& q) { return boost::multiprecision::denominator(q); }

Int floor_of(const Rat& q) {
  Int n = numer(q), d = denom(q);
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

Int ceil_of(const Rat& q) { return -floor_of(-q); }

Rat frac_of(const Rat& q) { return q - Rat(floor_of(q)); }

bool is_integral(const Rat& q) { return denom(q) == 1; }

Int gcd_of(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int t = x % y;
    x = y;
    y = t;
  }
  return x;
}

Int lcm_of(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd_of(a, b) * b);
}

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw InputError("not an integer: '" + text + "'");
  return Int(text);
}

Rat ratio(const Int& n, const Int& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  return d < 0 ? Rat(-n, -d) : Rat(n, d);
}

Rat parse_rat(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int p = parse_int(text.substr(0, slash));
  Int q = parse_int(text.substr(slash + 1));
  if (q == 0) throw InputError("zero denominator in '" + raw + "'");
  return ratio(p, q);
}

std::string to_string(const Int& z) { return z.str(); }

std::string to_string(const Rat& q) {
  if (denom(q) == 1) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

Slope::Slope(Int h_coeff, Int dual_coeff) : h_(std::move(h_coeff)), d_(std::move(dual_coeff)) {
  if (h_ == 0 && d_ == 0) throw std::invalid_argument("slope [0,0] is not a slope");
  Int g = gcd_of(h_, d_);
  h_ /= g;
  d_ /= g;
  if (d_ < 0 || (d_ == 0 && h_ < 0)) {
    h_ = -h_;
    d_ = -d_;
  }
}

Slope Slope::of_tau(const Rat& tau) { return Slope(numer(tau), -denom(tau)); }

std::optional<Rat> Slope::tau() const {
  if (d_ == 0) return std::nullopt;
  return Rat(-h_, d_);
}

std::string Slope::str() const { return "[" + h_.str() + "," + d_.str() + "]"; }

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Slope Slope::parse(const std::string& raw) {
  std::string t = strip_spaces(raw);
  if (t.size() < 5 || t.front() != '[' || t.back() != ']')
    throw InputError("slope must look like [p,q]: '" + raw + "'");
  auto comma = t.find(',');
  if (comma == std::string::npos) throw InputError("slope must look like [p,q]: '" + raw + "'");
  Int p = parse_int(t.substr(1, comma - 1));
  Int q = parse_int(t.substr(comma + 1, t.size() - comma - 2));
  if (p == 0 && q == 0) throw InputError("slope [0,0] is not a slope");
  if (gcd_of(p, q) != 1) throw InputError("slope is not primitive: '" + raw + "'");
  return Slope(p, q);
}

BasisChange::BasisChange(Int a, Int b, Int c, Int d) {
  m[0][0] = std::move(a);
  m[0][1] = std::move(b);
  m[1][0] = std::move(c);
  m[1][1] = std::move(d);
}

BasisChange BasisChange::parse(const std::string& raw) {
  std::string t = strip_spaces(raw);
  std::string digits;
  for (char c : t)
    if (c != '[' && c != ']') digits += c;
  std::array<Int, 4> v;
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    auto next = digits.find(',', pos);
    if ((i < 3) == (next == std::string::npos))
      throw InputError("matrix must look like [[a,b],[c,d]]: '" + raw + "'");
    v[i] = parse_int(digits.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    pos = next + 1;
  }
  return {v[0], v[1], v[2], v[3]};
}

Int BasisChange::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

BasisChange BasisChange::inverse() const {
  Int d = det();
  if (d != 1 && d != -1) throw std::invalid_argument("matrix not unimodular");
  return {m[1][1] * d, -m[0][1] * d, -m[1][0] * d, m[0][0] * d};
}

BasisChange BasisChange::after(const BasisChange& o) const {
  BasisChange r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  return r;
}

std::pair<Int, Int> BasisChange::apply(const Int& p, const Int& q) const {
  return {m[0][0] * p + m[0][1] * q, m[1][0] * p + m[1][1] * q};
}

std::string BasisChange::str() const {
  return "[[" + m[0][0].str() + "," + m[0][1].str() + "],[" + m[1][0].str() + "," + m[1][1].str() + "]]";
}

Int delta(const Slope& a, const Slope& b) {
  return abs(a.h_coeff() * b.dual_coeff() - a.dual_coeff() * b.h_coeff());
}

Slope change_basis(const Slope& s, const BasisChange& g) {
  auto [p, q] = g.apply(s.h_coeff(), s.dual_coeff());
  return Slope(p, q);
}

std::optional<Rat> tau_of(const Slope& s) { return s.tau(); }

Slope slope_of_tau(const Rat& tau) { return Slope::of_tau(tau); }

}  // namespace graphfol
