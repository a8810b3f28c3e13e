#include "zpflt/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>

#include "zpflt/arith/resultant.hpp"
#include "zpflt/cyclotomic.hpp"
#include "zpflt/error.hpp"
#include "zpflt/lmfdb.hpp"
#include "zpflt/number_field.hpp"
#include "zpflt/sunit.hpp"
#include "zpflt/verdict.hpp"

namespace zpflt::cli {

using ojson = nlohmann::ordered_json;

namespace {

ojson int_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return to_string(v);
}

ojson coeffs_json(const IntPolynomial& f) {
  ojson a = ojson::array();
  for (const auto& c : f.coeffs()) a.push_back(int_json(c));
  return a;
}

ojson citations_json(const std::vector<Citation>& cs) {
  ojson a = ojson::array();
  for (const auto& c : cs) a.push_back({{"tag", c.tag}, {"text", c.text}});
  return a;
}

ojson check_json(const CheckResult& c) { return {{"status", to_string(c.status)}, {"detail", c.detail}}; }

ojson certificate_json(const CertificateReport& r) {
  return {{"poly", coeffs_json(r.poly)},
          {"p", r.p},
          {"n", r.n},
          {"disc", int_json(r.disc)},
          {"checks",
           {{"degree_is_prime_power", check_json(r.degree_is_prime_power)},
            {"galois_evidence", check_json(r.galois_evidence)},
            {"totally_real", check_json(r.totally_real)},
            {"totally_ramified_at_p", check_json(r.totally_ramified_at_p)},
            {"two_inert", check_json(r.two_inert)}}},
          {"p_hypothesis", r.p_hypothesis},
          {"overall", to_string(r.overall)},
          {"sampled_primes", r.sampled_primes}};
}

ojson search_json(const SearchResult& r, const InertPrimeContext* ctx, bool* all_pass) {
  ojson sols = ojson::array();
  CriterionReport crit;
  if (ctx) crit = check_criterion_conditions(r.solutions);
  for (std::size_t k = 0; k < r.solutions.size(); ++k) {
    const auto& s = r.solutions[k];
    ojson j{{"lambda", s.lambda.to_string()}, {"mu", s.mu.to_string()}, {"in_box", s.in_box}};
    if (ctx) {
      const auto& c = crit.per_solution[k];
      j["ord_lambda"] = s.ord_lambda;
      j["ord_mu"] = s.ord_mu;
      j["class"] = to_string(s.cls);
      j["criterion"] = {{"bounded", c.bounded}, {"congruent", c.congruent}, {"pass", c.pass()}};
    }
    sols.push_back(std::move(j));
  }
  ojson out{{"count", r.solutions.size()},
            {"box_count", r.box_count},
            {"candidates", r.candidates},
            {"screening_primes", r.screening_primes},
            {"solutions", std::move(sols)},
            {"escaped", r.escaped},
            {"unrepresentable", r.unrepresentable}};
  if (ctx) {
    out["criterion_all_pass"] = crit.all_pass;
    if (all_pass) *all_pass = crit.all_pass;
  }
  return out;
}

ojson record_summary(const lmfdb::CertifiedRecord& cr) {
  return {{"label", cr.record.label},
          {"poly", coeffs_json(cr.record.poly)},
          {"disc", int_json(cr.record.disc)},
          {"overall", to_string(cr.report.overall)}};
}

void flatten_into(const ojson& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    if (j.empty()) out += path + ": {}\n";
    for (auto it = j.begin(); it != j.end(); ++it) flatten_into(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out += path + ": []\n";
    for (std::size_t k = 0; k < j.size(); ++k) flatten_into(j[k], path + "[" + std::to_string(k) + "]", out);
  } else if (j.is_string()) {
    out += path + ": " + j.get<std::string>() + "\n";
  } else {
    out += path + ": " + j.dump() + "\n";
  }
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument:
    case ErrorKind::not_squarefree:
    case ErrorKind::invalid_context:
    case ErrorKind::parse:
      return invalid_args;
    default:
      return failure;
  }
}

struct Options {
  std::string format = "json";
  bool strict = false;
  long p = 0, n = 0, height = 1, denom = 1;
  std::uint64_t lo = 0, hi = 0, q = 0, sample_bound = 100;
  std::string poly, fixture, state, base_url;
  bool live = false;
};

}  // namespace

std::string flatten(const ojson& report) {
  std::string out;
  flatten_into(report, "", out);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Asymptotic Fermat over cyclotomic Z_p-extension layers", "zpflt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--strict", o.strict, "exit 3 when a certificate is inconclusive");

  auto* verdict = app.add_subcommand("verdict", "asymptotic FLT status of the n-th layer for p");
  verdict->add_option("--p", o.p)->required();
  verdict->add_option("--n", o.n)->required();

  auto* wief = app.add_subcommand("wieferich", "Wieferich primes in [lo, hi]");
  wief->add_option("--lo", o.lo)->required();
  wief->add_option("--hi", o.hi)->required();

  auto* layer = app.add_subcommand("layer-poly", "defining polynomial of the n-th layer");
  layer->add_option("--p", o.p)->required();
  layer->add_option("--n", o.n)->required();

  auto* split = app.add_subcommand("splitting", "factorisation pattern of f mod q");
  split->add_option("--poly", o.poly, "ascending coefficients c0,c1,...")->required();
  split->add_option("--q", o.q)->required();

  auto* units = app.add_subcommand("unit-search", "unit equation lambda + mu = 1");
  units->add_option("--poly", o.poly)->required();
  units->add_option("--height", o.height)->required();

  auto* sunits = app.add_subcommand("sunit-search", "S-unit equation with S = {2}");
  sunits->add_option("--poly", o.poly)->required();
  sunits->add_option("--height", o.height)->required();
  sunits->add_option("--denom", o.denom)->required();

  auto* cert = app.add_subcommand("certify", "check the hypotheses of the p-extension criterion");
  cert->add_option("--poly", o.poly)->required();
  cert->add_option("--p", o.p)->required();
  cert->add_option("--sample-bound", o.sample_bound);

  auto* filt = app.add_subcommand("lmfdb-filter", "certify candidate quintic fields");
  auto* fx = filt->add_option("--fixture", o.fixture, "committed snapshot (default)");
  auto* lv = filt->add_flag("--live", o.live, "query the LMFDB API ($LMFDB_BASE_URL overrides the endpoint)");
  fx->excludes(lv);
  filt->add_option("--base-url", o.base_url)->needs(lv);
  filt->add_option("--state", o.state, "crawl state file for resuming")->needs(lv);
  filt->add_option("--p", o.p)->default_val(5);
  filt->add_option("--sample-bound", o.sample_bound);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  const auto start = std::chrono::steady_clock::now();
  ojson report{{"subcommand", nullptr}, {"inputs", ojson::object()}, {"results", ojson::object()},
               {"citations", ojson::array()}, {"elapsed_ms", 0}, {"status", "ok"}, {"error", nullptr}};
  auto emit = [&](int code) {
    report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.format == "text")
      out << flatten(report);
    else
      out << report.dump(2) << "\n";
    return code;
  };

  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    if (o.format != "json" && o.format != "text") o.format = "json";
    report["status"] = "error";
    report["error"] = {{"kind", "invalid-argument"}, {"message", e.what()}};
    return emit(invalid_args);
  }

  const CLI::App* sub = app.get_subcommands().front();
  report["subcommand"] = sub->get_name();
  ojson& in = report["inputs"];
  ojson& res = report["results"];
  bool undecided = false;

  try {
    if (sub == verdict) {
      in = {{"p", o.p}, {"n", o.n}};
      const Verdict v = asymptotic_flt_verdict(o.p, o.n);
      res = {{"p", v.p}, {"n", v.n}, {"status", to_string(v.status)}};
      report["citations"] = citations_json(v.reasons);
    } else if (sub == wief) {
      in = {{"lo", o.lo}, {"hi", o.hi}};
      const auto primes = wieferich_scan(o.lo, o.hi);
      res = {{"primes", primes}, {"count", primes.size()}};
    } else if (sub == layer) {
      in = {{"p", o.p}, {"n", o.n}};
      const LayerSpec spec(o.p, o.n);
      const IntPolynomial f = layer_polynomial(spec);
      res = {{"degree", spec.degree()},
             {"conductor", spec.conductor()},
             {"poly", coeffs_json(f)},
             {"polynomial", f.to_string()},
             {"disc", int_json(poly_discriminant(f))}};
    } else if (sub == split) {
      const IntPolynomial f = parse_coefficients(o.poly);
      in = {{"poly", coeffs_json(f)}, {"q", o.q}};
      const SplittingPattern sp = splitting_pattern(f, o.q);
      res = {{"degrees", sp.degrees}, {"pattern", sp.to_string()}, {"inert", sp.is_inert()},
             {"equal_degree", sp.all_equal()}};
    } else if (sub == units) {
      const IntPolynomial f = parse_coefficients(o.poly);
      in = {{"poly", coeffs_json(f)}, {"height", o.height}};
      const auto field = NumberField::create(f);
      res = search_json(enumerate_unit_solutions(field, o.height), nullptr, nullptr);
    } else if (sub == sunits) {
      const IntPolynomial f = parse_coefficients(o.poly);
      in = {{"poly", coeffs_json(f)}, {"height", o.height}, {"denom", o.denom}};
      const auto field = NumberField::create(f);
      const InertPrimeContext ctx(field);
      res = search_json(enumerate_sunit_solutions(field, ctx, {o.height, o.denom}), &ctx, nullptr);
      report["citations"] = ojson::array(
          {{{"tag", "thm:FS"},
            {"text", "every S-unit solution must satisfy max(|ord lambda|, |ord mu|) <= 4 and "
                     "ord(lambda mu) == 1 (mod 3)"}}});
    } else if (sub == cert) {
      const IntPolynomial f = parse_coefficients(o.poly);
      in = {{"poly", coeffs_json(f)}, {"p", o.p}, {"sample_bound", o.sample_bound}};
      const CertificateReport r = certify_general_field(f, o.p, o.sample_bound);
      res = certificate_json(r);
      report["citations"] = citations_json(r.citations);
      undecided = r.overall == CertificateStatus::inconclusive;
    } else if (sub == filt) {
      lmfdb::FetchResult fetched;
      if (o.live) {
        in = {{"source", "live"}, {"p", o.p}};
        auto transport = lmfdb::make_http_transport(o.base_url.empty() ? std::nullopt : std::optional(o.base_url));
        lmfdb::CrawlOptions copt;
        if (!o.state.empty()) copt.state_path = o.state;
        fetched = lmfdb::fetch_candidates(*transport, lmfdb::CandidateQuery{}, copt);
      } else {
        const auto path = o.fixture.empty() ? lmfdb::default_fixture_path() : std::filesystem::path(o.fixture);
        in = {{"source", "fixture"}, {"fixture", path.string()}, {"p", o.p}};
        fetched = lmfdb::fetch_candidates(path);
      }
      const auto fr = lmfdb::filter_by_theorem(fetched.records, o.p, o.sample_bound);
      ojson errors = ojson::array();
      for (const auto& e : fetched.errors) errors.push_back({{"stage", "parse"}, {"index", e.index}, {"message", e.message}});
      for (const auto& e : fr.errors) errors.push_back({{"stage", "certify"}, {"index", e.index}, {"message", e.message}});
      ojson pass = ojson::array(), failed = ojson::array(), inc = ojson::array();
      for (const auto& c : fr.pass) pass.push_back(record_summary(c));
      for (const auto& c : fr.fail) failed.push_back(record_summary(c));
      for (const auto& c : fr.inconclusive) inc.push_back(record_summary(c));
      res = {{"record_count", fetched.records.size()},
             {"pages", fetched.pages},
             {"pass_count", fr.pass.size()},
             {"fail_count", fr.fail.size()},
             {"inconclusive_count", fr.inconclusive.size()},
             {"pass", std::move(pass)},
             {"fail", std::move(failed)},
             {"inconclusive", std::move(inc)},
             {"errors", std::move(errors)}};
      if (!fr.pass.empty()) report["citations"] = citations_json(fr.pass.front().report.citations);
      undecided = !fr.inconclusive.empty();
    }
  } catch (const Error& e) {
    err << "zpflt: " << e.what() << "\n";
    if (e.kind() == ErrorKind::inconclusive) {
      report["status"] = "inconclusive";
      report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
      return emit(o.strict ? inconclusive : ok);
    }
    report["status"] = "error";
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    return emit(exit_for(e.kind()));
  } catch (const std::exception& e) {
    err << "zpflt: " << e.what() << "\n";
    report["status"] = "error";
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    return emit(failure);
  }
  if (undecided) {
    report["status"] = "inconclusive";
    return emit(o.strict ? inconclusive : ok);
  }
  return emit(ok);
}

}  // namespace zpflt::cli
