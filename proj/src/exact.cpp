#include "knotsig/exact.hpp"

namespace knotsig {

ExactInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: a product of i consecutive integers is divisible by i!
  }
  return r;
}

std::string decimal_render(const ExactRational& q, unsigned places) {
  const ExactInt num = boost::multiprecision::numerator(q);
  const ExactInt den = boost::multiprecision::denominator(q);

  ExactInt scaled = abs(num);
  for (unsigned i = 0; i < places; ++i) scaled *= 10;
  ExactInt rounded = scaled / den;
  if (2 * (scaled % den) >= den) ++rounded;  // half rounds away from zero

  std::string digits = rounded.str();
  std::string out;
  if (num < 0 && rounded != 0) out += '-';
  if (places == 0) return out + digits;
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, 1, '.');
  return out + digits;
}

double to_double(const ExactRational& q) { return q.convert_to<double>(); }

}  // namespace knotsig
