#include "crnreal/rational.hpp"

#include <algorithm>
#include <cctype>

#include "crnreal/error.hpp"

namespace crnreal {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view{}
                             : s.substr(slash + 1);
  if (!all_digits(num) ||
      (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorKind::InvalidArgument,
                "not a rational number: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(1);
  if (slash != std::string_view::npos) {
    d = Integer(std::string(den), 10);
    if (d == 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "zero denominator: '" + std::string(text) + "'");
    }
  }
  if (negative) {
    n = -n;
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) {
      out += ",";
    }
    out += to_string(v[i]);
  }
  return out + ")";
}

bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += a[i] * b[i];
  }
  return acc;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "vector sum: length mismatch");
  }
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector difference: length mismatch");
  }
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
  }
  return out;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = s * v[i];
  }
  return out;
}

RatVector primitive_integer(const RatVector& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) {
    return v;
  }
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Rational(ints[i] / g);
  }
  return out;
}

}  // namespace crnreal
