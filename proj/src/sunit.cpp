#include "zpflt/sunit.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "zpflt/arith/mod_poly.hpp"

namespace zpflt {

void SearchConfig::validate() const {
  if (height < 1) fail(ErrorKind::invalid_argument, "search height must be >= 1");
  if (denom_bound < 0) fail(ErrorKind::invalid_argument, "denominator bound must be >= 0");
  if (denom_bound > 62) fail(ErrorKind::invalid_argument, "denominator bound too large");
}

std::string_view to_string(SolutionClass c) {
  switch (c) {
    case SolutionClass::i: return "i";
    case SolutionClass::ii: return "ii";
    case SolutionClass::iii: return "iii";
    case SolutionClass::unit_unit: return "unit-unit";
    case SolutionClass::other: return "other";
  }
  return "other";
}

SolutionClass classify_solution(long ord_lambda, long ord_mu) {
  if (ord_lambda == 1 && ord_mu == 0) return SolutionClass::i;
  if (ord_lambda == 0 && ord_mu == 1) return SolutionClass::ii;
  if (ord_lambda == -1 && ord_mu == -1) return SolutionClass::iii;
  if (ord_lambda == 0 && ord_mu == 0) return SolutionClass::unit_unit;
  return SolutionClass::other;
}

CriterionCheck check_criterion(const SUnitSolution& s) {
  CriterionCheck c{};
  c.max_abs_ord = std::max(std::labs(s.ord_lambda), std::labs(s.ord_mu));
  c.ord_sum_mod3 = ((s.ord_lambda + s.ord_mu) % 3 + 3) % 3;
  c.bounded = c.max_abs_ord <= 4;
  c.congruent = c.ord_sum_mod3 == 1;
  return c;
}

CriterionReport check_criterion_conditions(std::span<const SUnitSolution> solutions) {
  CriterionReport r;
  for (const auto& s : solutions) {
    r.per_solution.push_back(check_criterion(s));
    r.all_pass = r.all_pass && r.per_solution.back().pass();
  }
  return r;
}

namespace {

enum class Mode { unit, sunit };

// Norm screen at a prime q where f splits into distinct linear factors:
// N(a) mod q = prod_i a(r_i). A candidate survives when the discrete log of
// that product lies in the subgroup of admissible norms (+-1, or +-2^k).
struct NormScreen {
  std::uint32_t q = 0;
  std::uint32_t g = 0;  // admissible iff log(N) == 0 (mod g)
  std::uint32_t sentinel = 0;
  std::vector<std::uint32_t> log_mod_g;               // by residue; sentinel at 0
  std::vector<std::uint32_t> shifted;                 // shifted[x] = log_mod_g[(x - H) mod q]
  std::vector<std::uint8_t> admissible;               // by sum of d logs
  std::vector<std::vector<std::uint32_t>> power;      // power[j][i] = r_i^j
  std::vector<std::vector<std::uint32_t>> wrap;       // 2H * r_i^j

  bool accepts_sum(std::uint64_t s) const { return s < admissible.size() && admissible[s]; }

  bool accepts(const std::vector<std::uint32_t>& residues) const {
    std::uint64_t s = 0;
    for (auto r : residues) s += log_mod_g[r];
    return accepts_sum(s);
  }
};

std::uint32_t primitive_root(std::uint32_t q) {
  std::vector<std::uint32_t> factors;
  std::uint32_t m = q - 1;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      factors.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t gen = 2; gen < q; ++gen) {
    bool ok = true;
    for (auto p : factors) ok = ok && modpow_u64(gen, (q - 1) / p, q) != 1;
    if (ok) return gen;
  }
  return 1;  // q == 2
}

std::vector<NormScreen> make_screens(const NumberField& field, Mode mode, long height, std::size_t count) {
  constexpr std::uint32_t kPrimeLimit = 4096;
  const int d = field.degree();
  struct Choice {
    std::uint32_t q, g;
    std::vector<std::uint64_t> roots;
  };
  std::vector<Choice> choices;
  for (std::uint32_t q = 3; q < kPrimeLimit; q += 2) {
    if (!is_prime(static_cast<std::uint64_t>(q))) continue;
    if (mod_u64(field.disc(), q) == 0) continue;
    auto roots = roots_mod(ModPolynomial(q, field.polynomial()));
    if (static_cast<int>(roots.size()) != d) continue;
    std::uint32_t g = (q - 1) / 2;
    if (mode == Mode::sunit) {
      const std::uint32_t gen = primitive_root(q);
      std::uint32_t log2 = 0;
      for (std::uint64_t x = 1; x != 2; x = x * gen % q) ++log2;
      g = std::gcd(g, log2);
    }
    if (g < 2) continue;
    choices.push_back({q, g, std::move(roots)});
  }
  std::stable_sort(choices.begin(), choices.end(), [](const Choice& a, const Choice& b) { return a.g > b.g; });
  if (choices.size() > count) choices.resize(count);

  std::vector<NormScreen> screens;
  for (auto& ch : choices) {
    NormScreen s;
    s.q = ch.q;
    s.g = ch.g;
    s.sentinel = static_cast<std::uint32_t>(d) * ch.g;
    s.log_mod_g.assign(ch.q, s.sentinel);
    const std::uint32_t gen = primitive_root(ch.q);
    std::uint64_t x = 1;
    for (std::uint32_t k = 0; k + 1 < ch.q; ++k) {
      s.log_mod_g[x] = k % ch.g;
      x = x * gen % ch.q;
    }
    const auto span = static_cast<std::size_t>(2 * height + 1);
    s.shifted.resize(ch.q + span);
    for (std::size_t i = 0; i < s.shifted.size(); ++i) {
      const long r = ((static_cast<long>(i) - height) % static_cast<long>(ch.q) + ch.q) % ch.q;
      s.shifted[i] = s.log_mod_g[static_cast<std::size_t>(r)];
    }
    s.admissible.assign(static_cast<std::size_t>(d) * ch.g, 0);
    for (std::size_t v = 0; v < s.admissible.size(); v += ch.g) s.admissible[v] = 1;
    s.power.assign(static_cast<std::size_t>(d), std::vector<std::uint32_t>(static_cast<std::size_t>(d)));
    s.wrap = s.power;
    for (int i = 0; i < d; ++i) {
      std::uint64_t p = 1;
      for (int j = 0; j < d; ++j) {
        s.power[j][i] = static_cast<std::uint32_t>(p);
        s.wrap[j][i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(2 * height) % ch.q * p % ch.q);
        p = p * ch.roots[static_cast<std::size_t>(i)] % ch.q;
      }
    }
    screens.push_back(std::move(s));
  }
  return screens;
}

struct SearchSetup {
  FieldPtr field;
  Mode mode;
  long height;
  long denom_bound;
  const InertPrimeContext* ctx;
  std::vector<NormScreen> screens;
};

bool all_even(const std::vector<long>& c) {
  return std::all_of(c.begin(), c.end(), [](long v) { return (v & 1) == 0; });
}

bool exact_check(const SearchSetup& s, const FieldElement& lambda, const FieldElement& mu) {
  if (lambda.is_zero() || mu.is_zero()) return false;
  if (s.mode == Mode::unit) {
    if (!lambda.is_integral() || !mu.is_integral()) return false;
    return abs(numerator_norm(lambda)) == 1 && abs(numerator_norm(mu)) == 1;
  }
  return is_s_unit(*s.ctx, lambda) && is_s_unit(*s.ctx, mu);
}

SUnitSolution make_solution(const SearchSetup& s, FieldElement lambda, FieldElement mu) {
  SUnitSolution sol{std::move(lambda), std::move(mu)};
  if (s.mode == Mode::sunit) {
    sol.ord_lambda = ord_at_q(*s.ctx, sol.lambda);
    sol.ord_mu = ord_at_q(*s.ctx, sol.mu);
  }
  sol.cls = classify_solution(sol.ord_lambda, sol.ord_mu);
  sol.in_box = sol.lambda.height() <= s.height && static_cast<long>(sol.lambda.denom_exp()) <= s.denom_bound;
  return sol;
}

// Enumerates numerators with coordinate d-1 fixed to `top` and exponent e.
void scan_slice(const SearchSetup& s, long top, unsigned long e, std::vector<SUnitSolution>& out,
                std::uint64_t& visited) {
  const int d = s.field->degree();
  const long H = s.height;
  const auto ns = s.screens.size();
  std::vector<long> c(static_cast<std::size_t>(d), -H);
  if (d >= 2) c[static_cast<std::size_t>(d - 1)] = top;

  std::vector<std::vector<std::uint32_t>> base(ns, std::vector<std::uint32_t>(static_cast<std::size_t>(d)));
  std::vector<std::uint32_t> two_e(ns);
  for (std::size_t k = 0; k < ns; ++k) {
    const auto& sc = s.screens[k];
    two_e[k] = static_cast<std::uint32_t>(modpow_u64(2, e, sc.q));
    for (int i = 0; i < d; ++i) {
      long acc = 0;
      for (int j = 1; j < d; ++j)
        acc = (acc + (c[static_cast<std::size_t>(j)] % static_cast<long>(sc.q) + sc.q) * sc.power[j][i]) % sc.q;
      base[k][static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(acc);
    }
  }

  std::vector<std::uint32_t> residues(static_cast<std::size_t>(d));
  auto survives_rest = [&](long c0) {
    for (std::size_t k = 0; k < ns; ++k) {
      const auto& sc = s.screens[k];
      const long shift = (c0 % static_cast<long>(sc.q) + sc.q) % sc.q;
      if (k > 0) {
        for (int i = 0; i < d; ++i)
          residues[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((base[k][static_cast<std::size_t>(i)] + shift) % sc.q);
        if (!sc.accepts(residues)) return false;
      }
      // numerator of mu = 2^e - numerator of lambda
      for (int i = 0; i < d; ++i) {
        const std::uint64_t v = (base[k][static_cast<std::size_t>(i)] + shift) % sc.q;
        residues[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((two_e[k] + sc.q - v) % sc.q);
      }
      if (!sc.accepts(residues)) return false;
    }
    return true;
  };

  auto verify = [&](long c0) {
    c[0] = c0;
    if (e > 0 && all_even(c)) return;  // already counted at a smaller exponent
    if (!survives_rest(c0)) return;
    std::vector<Integer> coords(c.begin(), c.end());
    FieldElement lambda(s.field, std::move(coords), e);
    FieldElement mu = FieldElement::from_integer(s.field, 1) - lambda;
    if (exact_check(s, lambda, mu)) out.push_back(make_solution(s, std::move(lambda), std::move(mu)));
  };

  const std::size_t inner = static_cast<std::size_t>(2 * H + 1);
  while (true) {
    visited += inner;
    if (ns == 0) {
      for (long c0 = -H; c0 <= H; ++c0) verify(c0);
    } else {
      const auto& sc = s.screens[0];
      const auto& b0 = base[0];
      for (std::size_t idx = 0; idx < inner; ++idx) {
        std::uint64_t sum = 0;
        for (int i = 0; i < d; ++i) sum += sc.shifted[b0[static_cast<std::size_t>(i)] + idx];
        if (sc.accepts_sum(sum)) verify(static_cast<long>(idx) - H);
      }
    }
    int j = 1;
    for (; j <= d - 2; ++j) {
      auto& cj = c[static_cast<std::size_t>(j)];
      if (cj < H) {
        ++cj;
        for (std::size_t k = 0; k < ns; ++k)
          for (int i = 0; i < d; ++i) {
            auto& b = base[k][static_cast<std::size_t>(i)];
            b = (b + s.screens[k].power[j][i]) % s.screens[k].q;
          }
        break;
      }
      cj = -H;
      for (std::size_t k = 0; k < ns; ++k)
        for (int i = 0; i < d; ++i) {
          auto& b = base[k][static_cast<std::size_t>(i)];
          b = (b + s.screens[k].q - s.screens[k].wrap[j][i]) % s.screens[k].q;
        }
    }
    if (j > d - 2) break;
  }
}

SearchResult run_search(const SearchSetup& setup) {
  const int d = setup.field->degree();
  struct Slice {
    long top;
    unsigned long e;
  };
  std::vector<Slice> slices;
  const long top_lo = d >= 2 ? -setup.height : 0, top_hi = d >= 2 ? setup.height : 0;
  for (long e = 0; e <= setup.denom_bound; ++e)
    for (long top = top_lo; top <= top_hi; ++top) slices.push_back({top, static_cast<unsigned long>(e)});

  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                            static_cast<unsigned>(slices.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::vector<SUnitSolution>> found(workers);
  std::vector<std::uint64_t> visited(workers, 0);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](unsigned w) {
    try {
      for (std::size_t k = next++; k < slices.size(); k = next++)
        scan_slice(setup, slices[k].top, slices[k].e, found[w], visited[w]);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  SearchResult result;
  for (const auto& sc : setup.screens) result.screening_primes.push_back(sc.q);
  for (auto v : visited) result.candidates += v;

  auto by_lambda = [](const SUnitSolution& a, const SUnitSolution& b) { return a.lambda < b.lambda; };
  std::vector<SUnitSolution> box;
  for (auto& part : found)
    for (auto& sol : part) box.push_back(std::move(sol));
  std::sort(box.begin(), box.end(), by_lambda);
  result.box_count = box.size();

  // close under the order-6 group generated by the swap and (l, m) -> (1/l, -m/l)
  std::set<FieldElement> seen;
  std::deque<SUnitSolution> queue;
  for (auto& sol : box) {
    seen.insert(sol.lambda);
    queue.push_back(sol);
  }
  std::vector<SUnitSolution> all = std::move(box);
  const FieldElement one = FieldElement::from_integer(setup.field, 1);
  while (!queue.empty()) {
    const SUnitSolution cur = std::move(queue.front());
    queue.pop_front();
    std::vector<std::pair<FieldElement, FieldElement>> images;
    images.emplace_back(cur.mu, cur.lambda);
    try {
      images.emplace_back(one / cur.lambda, -(cur.mu / cur.lambda));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::not_representable) throw;
      result.unrepresentable.push_back("1/(" + cur.lambda.to_string() + ")");
    }
    for (auto& [l, m] : images) {
      if (seen.count(l)) continue;
      if (!(l + m == one)) fail(ErrorKind::internal_consistency, "closure image does not sum to 1");
      seen.insert(l);
      if (!exact_check(setup, l, m)) {
        result.unrepresentable.push_back(l.to_string());
        continue;
      }
      SUnitSolution sol = make_solution(setup, l, m);
      if (!sol.in_box) result.escaped.push_back(sol.lambda.to_string());
      queue.push_back(sol);
      all.push_back(std::move(sol));
    }
  }
  std::sort(all.begin(), all.end(), by_lambda);
  std::sort(result.escaped.begin(), result.escaped.end());
  result.solutions = std::move(all);
  return result;
}

}  // namespace

SearchResult enumerate_unit_solutions(const FieldPtr& field, long height) {
  if (field->degree() < 2) fail(ErrorKind::invalid_argument, "unit search needs degree >= 2");
  SearchConfig{height, 0}.validate();
  SearchSetup setup{field, Mode::unit, height, 0, nullptr, make_screens(*field, Mode::unit, height, 2)};
  return run_search(setup);
}

SearchResult enumerate_sunit_solutions(const FieldPtr& field, const InertPrimeContext& ctx, const SearchConfig& config) {
  config.validate();
  if (ctx.field()->polynomial() != field->polynomial())
    fail(ErrorKind::invalid_argument, "inert-prime context belongs to a different field");
  SearchSetup setup{field, Mode::sunit, config.height, config.denom_bound, &ctx,
                    make_screens(*field, Mode::sunit, config.height, 2)};
  return run_search(setup);
}

}  // namespace zpflt
