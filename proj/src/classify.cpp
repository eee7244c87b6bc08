#include "bsq/classify.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bsq/errors.hpp"

namespace bsq {

namespace {

void require_nonzero(std::int64_t m, std::int64_t n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("presentation parameters must be nonzero");
}

}  // namespace

std::vector<std::int64_t> prime_support(std::int64_t k) {
  if (k == 0) throw std::invalid_argument("zero has no prime support");
  std::int64_t v = checked_abs(k);
  std::vector<std::int64_t> primes;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) {
      primes.push_back(d);
      while (v % d == 0) v /= d;
    }
  if (v > 1) primes.push_back(v);
  return primes;
}

bool bs_residually_finite(std::int64_t m, std::int64_t n) {
  require_nonzero(m, n);
  return checked_abs(m) == 1 || checked_abs(n) == 1 ||
         checked_abs(m) == checked_abs(n);
}

bool bs_hopfian(std::int64_t m, std::int64_t n) {
  return bs_residually_finite(m, n) || prime_support(m) == prime_support(n);
}

bool conj_bs_residually_finite(std::int64_t m, std::int64_t n) {
  return bs_residually_finite(m, n);
}

HopfVerdict conj_bs_hopf_status(std::int64_t m, std::int64_t n) {
  return bs_hopfian(m, n) ? HopfVerdict::Open : HopfVerdict::NonHopfian;
}

RouteResult route_case(std::int64_t m, std::int64_t n) {
  if (bs_residually_finite(m, n)) return {CaseRoute::RF, std::nullopt};
  if (prime_support(m) != prime_support(n)) return {CaseRoute::Case1, std::nullopt};
  std::int64_t am = checked_abs(m);
  std::int64_t an = checked_abs(n);
  if (an % am == 0 || am % an == 0) return {CaseRoute::Case2, std::nullopt};
  std::int64_t k = std::gcd(am, an);
  return {CaseRoute::Case3, std::make_pair(m / k, n / k)};
}

Classification classify(std::int64_t m, std::int64_t n) {
  require_nonzero(m, n);
  Classification c;
  c.m = m;
  c.n = n;
  c.group_rf = bs_residually_finite(m, n);
  c.group_hopf = bs_hopfian(m, n);
  c.conj_rf = conj_bs_residually_finite(m, n);
  c.conj_hopf = conj_bs_hopf_status(m, n);
  if (c.conj_hopf == HopfVerdict::Open) c.open_question = c.conj_rf ? 1 : 2;
  RouteResult route = route_case(m, n);
  c.route = route.route;
  c.reduced = route.reduced;
  return c;
}

std::string route_name(CaseRoute r) {
  switch (r) {
    case CaseRoute::RF: return "RF";
    case CaseRoute::Case1: return "Case1";
    case CaseRoute::Case2: return "Case2";
    case CaseRoute::Case3: return "Case3";
  }
  return "?";
}

std::string render_classification(const Classification& c) {
  auto yn = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << "m=" << c.m << '\n';
  os << "n=" << c.n << '\n';
  os << "group_rf=" << yn(c.group_rf) << '\n';
  os << "group_hopf=" << yn(c.group_hopf) << '\n';
  os << "conj_rf=" << yn(c.conj_rf) << '\n';
  os << "conj_hopf=";
  if (c.conj_hopf == HopfVerdict::NonHopfian)
    os << "NonHopfian";
  else
    os << "Open(Q" << c.open_question << ")";
  os << '\n';
  os << "conj_infinitely_generated=" << yn(c.conj_infinitely_generated) << '\n';
  os << "route=" << route_name(c.route) << '\n';
  if (c.reduced)
    os << "reduced=(" << c.reduced->first << "," << c.reduced->second << ")\n";
  return os.str();
}

}  // namespace bsq
