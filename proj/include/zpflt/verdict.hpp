#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zpflt/arith/polynomial.hpp"

namespace zpflt {

/// 2^(p-1) == 1 (mod p^2). Throws invalid_argument for p = 2 or p not prime.
bool is_wieferich(std::uint64_t p);

/// All Wieferich primes in [lo, hi], ascending. Segmented sieve; segments
/// are processed in parallel and merged in order.
std::vector<std::uint64_t> wieferich_scan(std::uint64_t lo, std::uint64_t hi);

struct Citation {
  std::string tag;
  std::string text;
};

enum class VerdictStatus { effective_holds, holds, open };
std::string_view to_string(VerdictStatus s);

/// Asymptotic FLT over the n-th layer of the cyclotomic Z_p-extension. The
/// bound B_F is only ever asserted to exist; no value is computed.
struct Verdict {
  long p;
  long n;
  VerdictStatus status;
  std::vector<Citation> reasons;
};

/// Depends on p only; n is echoed and validated (n >= 1, p prime).
Verdict asymptotic_flt_verdict(long p, long n);

enum class CheckStatus { pass, fail, inconclusive };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  CheckStatus status = CheckStatus::inconclusive;
  std::string detail;
};

enum class CertificateStatus { certified_evidence, failed, inconclusive };
std::string_view to_string(CertificateStatus s);

/// Evidence that F = Q[x]/(f) meets the hypotheses of the p-extension
/// generalisation: cyclic-looking of degree p^n, totally real, p totally
/// ramified, 2 inert.
struct CertificateReport {
  IntPolynomial poly;
  long p = 0;
  long n = 0;  // deg f = p^n when the degree check passes
  Integer disc;
  CheckResult degree_is_prime_power;
  CheckResult galois_evidence;  // necessary condition only, sampled
  CheckResult totally_real;
  CheckResult totally_ramified_at_p;
  CheckResult two_inert;
  bool p_hypothesis = false;  // p >= 5
  CertificateStatus overall = CertificateStatus::inconclusive;
  std::vector<Citation> citations;
  std::vector<std::uint64_t> sampled_primes;
};

CertificateReport certify_general_field(const IntPolynomial& f, long p, std::uint64_t sample_bound = 100);

}  // namespace zpflt
