#include "apu/progression.hpp"

#include <algorithm>

#include "apu/gcd_sum.hpp"

namespace apu {

namespace {

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::optional<ArithmeticProgression> intersect(const ArithmeticProgression& p1,
                                               const ArithmeticProgression& p2) {
  // Clear denominators: with D = lcm of all four denominators, both
  // progressions become integer APs x = A + j*B scaled by 1/D.
  Int d = lcm_int(lcm_int(p1.start().den(), p1.diff().den()),
                  lcm_int(p2.start().den(), p2.diff().den()));
  const Int a1 = p1.start().num() * (d / p1.start().den());
  const Int b1 = p1.diff().num() * (d / p1.diff().den());
  const Int a2 = p2.start().num() * (d / p2.start().den());
  const Int b2 = p2.diff().num() * (d / p2.diff().den());

  // Solve x == a1 (mod b1), x == a2 (mod b2) by CRT.
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b1.get_mpz_t(), b2.get_mpz_t());
  Int delta = a2 - a1;
  if (!mpz_divisible_p(delta.get_mpz_t(), g.get_mpz_t())) return std::nullopt;

  const Int step = b1 / g * b2;  // lcm(b1, b2)
  // x = a1 + b1 * u with u == (delta/g) * s (mod b2/g)
  const Int mod_u = b2 / g;
  Int u = (delta / g * s) % mod_u;
  if (u < 0) u += mod_u;
  const Int base = a1 + b1 * u;  // some common value, == lo of its residue class >= a1

  const Int lo = std::max(a1, a2);
  const Int hi = std::min(a1 + (int_from(p1.length()) - 1) * b1,
                          a2 + (int_from(p2.length()) - 1) * b2);
  Int first = base;
  if (first < lo) first += ceil_div(lo - first, step) * step;
  if (first > hi) return std::nullopt;
  const Int count = floor_div(hi - first, step) + 1;

  const std::uint64_t len = mpz_get_ui(count.get_mpz_t());
  if (len == 1) return ArithmeticProgression(Rational(first, d), Rational(1), 1);
  return ArithmeticProgression(Rational(first, d), Rational(step, d), len);
}

std::uint64_t intersection_size(const ArithmeticProgression& p1,
                                const ArithmeticProgression& p2) {
  auto common = intersect(p1, p2);
  return common ? common->length() : 0;
}

IntersectionBoundReport intersection_size_bound_check(const ArithmeticProgression& p1,
                                                      const ArithmeticProgression& p2) {
  if (!p1.diff().is_integer() || !p2.diff().is_integer())
    throw std::invalid_argument("intersection_size_bound_check: differences must be integers");
  if (p1.length() != p2.length())
    throw std::invalid_argument("intersection_size_bound_check: lengths must be equal");
  const Int q1 = p1.diff().num();
  const Int q2 = p2.diff().num();
  Int g;
  mpz_gcd(g.get_mpz_t(), q1.get_mpz_t(), q2.get_mpz_t());
  IntersectionBoundReport rep;
  rep.size = intersection_size(p1, p2);
  rep.bound = Rational(1) + Rational(int_from(p1.length())) * Rational(g, std::max(q1, q2));
  rep.holds = Rational(int_from(rep.size)) <= rep.bound;
  return rep;
}

DifferenceRatioReport difference_ratio_check(const ArithmeticProgression& p1,
                                                 const ArithmeticProgression& p2) {
  if (p1.length() != p2.length() || p1.length() < 2)
    throw std::invalid_argument("difference_ratio_check: lengths must be equal and >= 2");
  DifferenceRatioReport rep;
  rep.r = intersection_size(p1, p2);
  rep.diff_ratio = ratio_of(p1.diff(), p2.diff());
  if (rep.r < 2) {
    rep.vacuous = true;
    rep.holds = true;
    return rep;
  }
  rep.ratio_bound = static_cast<int>((p1.length() - 1) / (rep.r - 1));
  rep.holds = in_rd(rep.diff_ratio, rep.ratio_bound);
  return rep;
}

APFamily::APFamily(std::vector<ArithmeticProgression> members) : members_(std::move(members)) {
  std::vector<Rational> diffs;
  diffs.reserve(members_.size());
  for (const auto& p : members_) diffs.push_back(p.diff());
  std::sort(diffs.begin(), diffs.end());
  for (std::size_t i = 1; i < diffs.size(); ++i)
    if (diffs[i] == diffs[i - 1])
      throw std::invalid_argument("APFamily: differences must be pairwise distinct");
}

std::uint64_t APFamily::total_length() const {
  std::uint64_t s = 0;
  for (const auto& p : members_) s += p.length();
  return s;
}

bool APFamily::uniform_length() const {
  for (const auto& p : members_)
    if (p.length() != members_.front().length()) return false;
  return true;
}

bool APFamily::integer_differences() const {
  for (const auto& p : members_)
    if (!p.diff().is_integer()) return false;
  return true;
}

UnionCensus union_census(const APFamily& f) {
  std::vector<Rational> all;
  all.reserve(f.total_length());
  for (const auto& p : f)
    for (auto& x : p.elements()) all.push_back(std::move(x));
  std::sort(all.begin(), all.end());

  UnionCensus out;
  out.alpha_sum = all.size();
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i + 1;
    while (j < all.size() && all[j] == all[i]) ++j;
    ++out.cardinality;
    ++out.multiplicity_histogram[j - i];
    out.points.emplace_back(std::move(all[i]), j - i);
    i = j;
  }
  return out;
}

std::uint64_t w_count_family(const APFamily& f) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) w += intersection_size(f[i], f[j]);
  return w;
}

Rational dawson_sankoff_bound(const APFamily& f) {
  if (f.size() == 0) throw std::invalid_argument("dawson_sankoff_bound: family must be nonempty");
  const Int total = int_from(f.total_length());
  const Int denom = total + 2 * int_from(w_count_family(f));
  return Rational(total * total, denom);
}

GcdSumBoundReport gcdsum_union_bound_check(const APFamily& f) {
  if (!f.integer_differences())
    throw std::invalid_argument("gcdsum_union_bound_check: differences must be integers");
  if (!f.uniform_length())
    throw std::invalid_argument("gcdsum_union_bound_check: lengths must be uniform");
  std::vector<Int> diffs;
  diffs.reserve(f.size());
  for (const auto& p : f) diffs.push_back(p.diff().num());
  std::sort(diffs.begin(), diffs.end());

  const Int n = int_from(f.size());
  const Int len = int_from(f[0].length());
  const Rational denom = Rational(n * len) + Rational(n * n) +
                         Rational(2 * len) * (f.size() >= 2 ? gcd_sum(diffs) : Rational(0));
  GcdSumBoundReport rep;
  rep.union_size = union_census(f).cardinality;
  rep.bound = Rational(n * len * n * len) / denom;
  rep.holds = Rational(int_from(rep.union_size)) >= rep.bound;
  return rep;
}

}  // namespace apu
