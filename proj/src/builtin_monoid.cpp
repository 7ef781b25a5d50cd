#include "mgstill/builtin_monoid.hpp"

#include <stdexcept>

#include "mgstill/errors.hpp"

namespace mgstill {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long nth_prime(long n) {
  if (n < 1) throw std::invalid_argument("nth_prime index starts at 1");
  long count = 0;
  for (long p = 2;; ++p)
    if (is_prime(p) && ++count == n) return p;
}

namespace {

// Trial-divide the denominator; nullopt when not squarefree. Guarded so the
// factorization cannot run away on adversarial input.
std::optional<std::vector<long>> squarefree_prime_factors(const BigInt& den) {
  std::vector<long> primes;
  BigInt rest = den;
  for (long p = 2; BigInt(p) * p <= rest; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) return std::nullopt;
    primes.push_back(p);
    if (p > 1000000) break;
  }
  if (rest > 1) {
    if (!rest.fits_slong_p())
      throw analysis_error("denominator too large to factor");
    primes.push_back(rest.get_si());
  }
  return primes;
}

long mod_inverse(long a, long p) {
  long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
  while (newr != 0) {
    long q = r / newr;
    t -= q * newt; std::swap(t, newt);
    r -= q * newr; std::swap(r, newr);
  }
  return ((t % p) + p) % p;
}

// Membership in the prime-shift monoid by bounded search: generators are 1 and
// g_n = n + 1/p_n >= 3/2, so only finitely many can appear below q.
bool prime_shift_member(const Rational& q) {
  if (q.sign() < 0) return false;
  if (q.is_integer()) return true;
  for (long n = 1; Rational(n) <= q; ++n) {
    Rational gen = Rational(n) + Rational(1, nth_prime(n));
    if (gen <= q && prime_shift_member(q - gen)) return true;
  }
  return false;
}

}  // namespace

bool BuiltinMonoid::contains(const DegreeVector& q) const {
  if (q.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  switch (tag_) {
    case BuiltinTag::HalfplanePlusOrigin:
      if (!q[0].is_integer() || !q[1].is_integer()) return false;
      return q[1].sign() > 0 || q.is_zero();
    case BuiltinTag::PrimeReciprocal:
      return prime_reciprocal_canonical(q[0]).has_value();
    case BuiltinTag::PrimeShift:
      return prime_shift_member(q[0]);
  }
  return false;
}

std::optional<PrimeReciprocalForm> prime_reciprocal_canonical(const Rational& q) {
  if (q.sign() < 0) throw std::invalid_argument("negative input");
  BigInt den = q.den();
  auto primes = squarefree_prime_factors(den);
  if (!primes) return std::nullopt;

  PrimeReciprocalForm form;
  Rational fractional_sum;
  for (long p : *primes) {
    // residue of q at p: num * (den/p)^{-1} mod p; never 0 since the fraction
    // is reduced and p divides den exactly once
    BigInt den_over_p = den / p;
    long dop = static_cast<long>(mpz_fdiv_ui(den_over_p.get_mpz_t(), p));
    long numr = static_cast<long>(mpz_fdiv_ui(q.num().get_mpz_t(), p));
    long h = (numr * mod_inverse(dop, p)) % p;
    form.parts.emplace_back(p, h);
    fractional_sum += Rational(h, p);
  }
  Rational rest = q - fractional_sum;
  if (!rest.is_integer() || rest.sign() < 0) return std::nullopt;
  form.integer_part = rest.num();
  return form;
}

Rational prime_reciprocal_value(const PrimeReciprocalForm& form) {
  Rational v{form.integer_part};
  for (const auto& [p, h] : form.parts) v += Rational(h, p);
  return v;
}

long descending_chain_bound(const Rational& q) {
  auto form = prime_reciprocal_canonical(q);
  if (!form) throw analysis_error("not a member of the prime-reciprocal monoid");
  BigInt total = form->integer_part;
  for (const auto& [p, h] : form->parts) total += h;
  return total.get_si();
}

std::vector<Rational> unbounded_factorization_witness(long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  return std::vector<Rational>(static_cast<std::size_t>(p), Rational(1, p));
}

}  // namespace mgstill
