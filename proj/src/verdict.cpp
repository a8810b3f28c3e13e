#include "zpflt/verdict.hpp"

#include <atomic>
#include <optional>
#include <cmath>
#include <thread>

#include "zpflt/arith/mod_poly.hpp"
#include "zpflt/arith/resultant.hpp"
#include "zpflt/arith/sturm.hpp"
#include "zpflt/number_field.hpp"

namespace zpflt {

namespace {

bool wieferich_unchecked(std::uint64_t p) {
  if (p < (std::uint64_t{1} << 32)) return modpow_u64(2, p - 1, p * p) == 1;
  const Integer pp(static_cast<unsigned long>(p));
  return modpow(Integer(2), pp - 1, pp * pp) == 1;
}

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

bool is_wieferich(std::uint64_t p) {
  if (p == 2) fail(ErrorKind::invalid_argument, "Wieferich test needs an odd prime");
  if (!is_prime(p)) fail(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  return wieferich_unchecked(p);
}

std::vector<std::uint64_t> wieferich_scan(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || lo > hi) fail(ErrorKind::invalid_argument, "wieferich_scan needs 2 <= lo <= hi");
  if (hi >= (std::uint64_t{1} << 42)) fail(ErrorKind::invalid_argument, "wieferich_scan range above 2^42");
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
  const std::vector<std::uint32_t> base = small_primes(root);

  const std::uint64_t segments = (hi - lo) / kSegment + 1;
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(segments));
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    std::vector<std::uint8_t> composite(kSegment);
    for (std::uint64_t s = next++; s < segments; s = next++) {
      const std::uint64_t a = lo + s * kSegment;
      const std::uint64_t b = std::min(hi, a + kSegment - 1);
      std::fill(composite.begin(), composite.end(), 0);
      for (std::uint64_t p : base) {
        if (p * p > b) break;
        std::uint64_t start = std::max(p * p, (a + p - 1) / p * p);
        for (std::uint64_t j = start; j <= b; j += p) composite[j - a] = 1;
      }
      for (std::uint64_t n = std::max<std::uint64_t>(a, 3); n <= b; ++n) {
        if (composite[n - a] || n % 2 == 0) continue;
        if (wieferich_unchecked(n)) found[s].push_back(n);
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                            static_cast<unsigned>(std::min<std::uint64_t>(segments, 64))));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<std::uint64_t> out;
  for (const auto& seg : found) out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::effective_holds: return "effective-holds";
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::open: return "open";
  }
  return "open";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::certified_evidence: return "certified-evidence";
    case CertificateStatus::failed: return "failed";
    case CertificateStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict asymptotic_flt_verdict(long p, long n) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorKind::invalid_argument, "layer index n must be >= 1");
  Verdict v{p, n, VerdictStatus::open, {}};
  const std::string layer = "Q_{n," + std::to_string(p) + "}";
  const Citation n_free{"n-independent", "the verdict depends on p alone; the same holds for every n >= 1"};

  if (p == 2) {
    v.status = VerdictStatus::effective_holds;
    v.reasons.push_back({"thm:Z2", "effective asymptotic FLT is known over every layer of the cyclotomic Z_2-extension"});
    v.reasons.push_back(n_free);
    return v;
  }
  if (p == 3) {
    v.reasons.push_back({"rem:open-cases",
                         "p = 3 is outside the non-Wieferich theorem (p >= 5 required); the unit equation has solutions "
                         "in Q_{1,3}, e.g. lambda = 2 - theta, and they violate the S-unit criterion"});
    v.reasons.push_back({"lem:Zpunit", "unit-equation emptiness covers p >= 5 only; Q_{1,3} has 18 unit solutions"});
    v.reasons.push_back(n_free);
    return v;
  }
  const std::uint64_t pp = static_cast<std::uint64_t>(p);
  const Integer residue = modpow(Integer(2), Integer(p - 1), Integer(p) * p);
  if (wieferich_unchecked(pp)) {
    v.reasons.push_back({"rem:open-cases", "p is Wieferich (2^(p-1) == 1 mod p^2), so 2 splits in " + layer +
                                               " into at least p primes and the single-prime S-unit criterion does not apply"});
    v.reasons.push_back({"lem:inertZp", "2 is inert iff 2^(p-1) != 1 mod p^2; here it is 1"});
    v.reasons.push_back(n_free);
    return v;
  }
  v.status = VerdictStatus::effective_holds;
  v.reasons.push_back({"thm:Zp", "p >= 5 is non-Wieferich, so effective asymptotic FLT holds over " + layer});
  v.reasons.push_back({"lem:inertZp", "2^(p-1) mod p^2 = " + residue.get_str() + " != 1, hence 2 is inert in " + layer});
  v.reasons.push_back({"lem:ZpSunit", "every S-unit solution has 2-adic valuations (1,0), (0,1) or (-1,-1), which meet "
                                      "the bound |ord| <= 4 and ord(lambda*mu) == 1 mod 3"});
  v.reasons.push_back({"thm:FS", "S-unit criterion for asymptotic FLT with S = {2*O}; effectivity from modularity of "
                                 "elliptic curves over the layers. B_F exists; no value is computed"});
  v.reasons.push_back(n_free);
  return v;
}

// ---------------------------------------------------------------------------

CertificateReport certify_general_field(const IntPolynomial& f, long p, std::uint64_t sample_bound) {
  if (!f.is_monic() || f.degree() < 1) fail(ErrorKind::invalid_argument, "certify: polynomial must be monic of degree >= 1");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) fail(ErrorKind::invalid_argument, "certify: p must be prime");
  CertificateReport r;
  r.poly = f;
  r.p = p;
  r.disc = poly_discriminant(f);
  r.p_hypothesis = p >= 5;
  const int d = f.degree();

  // (a) degree p^n and Galois evidence
  const auto [n, is_power] = prime_power_exponent(Integer(d), Integer(p));
  if (is_power) {
    r.n = n;
    r.degree_is_prime_power = {CheckStatus::pass, "degree " + std::to_string(d) + " = " + std::to_string(p) + "^" + std::to_string(n)};
  } else {
    r.degree_is_prime_power = {CheckStatus::fail, "degree " + std::to_string(d) + " is not a power of " + std::to_string(p)};
  }

  if (r.disc == 0) {
    r.galois_evidence = {CheckStatus::fail, "f has a repeated root, so it is reducible"};
    r.totally_real = {CheckStatus::fail, "f is not squarefree"};
  } else {
    std::string first_bad;
    for (std::uint64_t q = 2; q <= sample_bound; ++q) {
      if (!is_prime(q) || mod_u64(r.disc, q) == 0) continue;
      r.sampled_primes.push_back(q);
      const SplittingPattern pat = splitting_pattern(f, q);
      if (!pat.all_equal() && first_bad.empty())
        first_bad = "pattern " + pat.to_string() + " mod " + std::to_string(q) + " has unequal degrees";
    }
    if (!first_bad.empty()) {
      r.galois_evidence = {CheckStatus::fail, first_bad + "; not Galois"};
    } else if (r.sampled_primes.empty()) {
      r.galois_evidence = {CheckStatus::inconclusive, "no unramified primes up to " + std::to_string(sample_bound)};
    } else {
      r.galois_evidence = {CheckStatus::pass, "equal residue degrees at all " + std::to_string(r.sampled_primes.size()) +
                                                  " sampled primes (necessary for Galois, not sufficient)"};
    }
    const int real = sturm_real_root_count(f);
    r.totally_real = {real == d ? CheckStatus::pass : CheckStatus::fail,
                      std::to_string(real) + " of " + std::to_string(d) + " roots real"};
  }

  // (b) f(x + c) == x^d mod p and Eisenstein at p
  {
    const auto q = static_cast<std::uint64_t>(p);
    std::optional<long> point;
    for (long c = 0; c < p && !point; ++c) {
      const IntPolynomial g = f.shift(Integer(c));
      bool ok = true;
      for (int k = 0; k < d && ok; ++k) ok = mod_u64(g[static_cast<std::size_t>(k)], q) == 0;
      if (ok) point = c;
    }
    if (!point) {
      r.totally_ramified_at_p = {CheckStatus::fail, "f is not congruent to (x - c)^d mod p for any c"};
    } else {
      const IntPolynomial g = f.shift(Integer(*point));
      const Integer pp = Integer(p) * p;
      if (mod(g[0], pp) != 0) {
        r.totally_ramified_at_p = {CheckStatus::pass, "f(x + " + std::to_string(*point) + ") is Eisenstein at " + std::to_string(p)};
      } else {
        r.totally_ramified_at_p = {CheckStatus::inconclusive, "f(x + " + std::to_string(*point) + ") == x^d mod p but p^2 divides "
                                                              "the constant term; Eisenstein certificate unavailable"};
      }
    }
  }

  // (c) 2 inert
  if (r.disc != 0 && mod_u64(r.disc, 2) == 0) {
    r.two_inert = {CheckStatus::inconclusive, "2 divides disc(f)"};
  } else if (r.disc != 0) {
    const SplittingPattern pat = splitting_pattern(f, 2);
    r.two_inert = {pat.is_inert() ? CheckStatus::pass : CheckStatus::fail, "pattern mod 2 is " + pat.to_string()};
  } else {
    r.two_inert = {CheckStatus::inconclusive, "f is not squarefree"};
  }

  const CheckResult* checks[] = {&r.degree_is_prime_power, &r.galois_evidence, &r.totally_real,
                                 &r.totally_ramified_at_p, &r.two_inert};
  bool any_fail = false, any_open = false;
  for (const auto* c : checks) {
    any_fail = any_fail || c->status == CheckStatus::fail;
    any_open = any_open || c->status == CheckStatus::inconclusive;
  }
  if (any_fail || !r.p_hypothesis) {
    r.overall = CertificateStatus::failed;
  } else if (any_open) {
    r.overall = CertificateStatus::inconclusive;
  } else {
    r.overall = CertificateStatus::certified_evidence;
  }
  r.citations.push_back({"thm:p-extension", "F totally real, Galois of degree p^n, p >= 5 totally ramified and 2 inert "
                                            "implies asymptotic FLT over F"});
  if (!r.p_hypothesis)
    r.citations.push_back({"hypothesis", "p = " + std::to_string(p) + " excluded by the theorem's hypothesis p >= 5"});
  return r;
}

}  // namespace zpflt
