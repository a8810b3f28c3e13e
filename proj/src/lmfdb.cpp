#include "zpflt/lmfdb.hpp"

#include <httplib.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <semaphore>
#include <sstream>
#include <thread>

namespace zpflt::lmfdb {

namespace {

Integer integer_from_json(const json& v, const char* what) {
  Integer out;
  if (v.is_number_integer()) {
    out = Integer(v.dump());
  } else if (v.is_string()) {
    if (out.set_str(v.get<std::string>(), 10) != 0) fail(ErrorKind::parse, std::string("bad integer in ") + what);
  } else {
    fail(ErrorKind::parse, std::string("expected integer for ") + what);
  }
  return out;
}

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

}  // namespace

FieldRecord FieldRecord::from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::parse, "record is not a JSON object");
  for (const char* key : {"label", "coeffs", "degree", "disc_abs", "disc_sign", "galois_label"})
    if (!j.contains(key)) fail(ErrorKind::parse, std::string("record missing '") + key + "'");
  FieldRecord r;
  try {
    r.label = j.at("label").get<std::string>();
    r.galois_label = j.at("galois_label").get<std::string>();
    r.degree = j.at("degree").get<int>();
    std::vector<Integer> c;
    for (const auto& v : j.at("coeffs")) c.push_back(integer_from_json(v, "coeffs"));
    r.poly = IntPolynomial(std::move(c));
    const int sign = j.at("disc_sign").get<int>();
    if (sign != 1 && sign != -1) fail(ErrorKind::parse, "disc_sign must be +1 or -1");
    r.disc = sign * integer_from_json(j.at("disc_abs"), "disc_abs");
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, std::string("record field has wrong type: ") + e.what());
  }
  if (r.poly.degree() != r.degree)
    fail(ErrorKind::parse, r.label + ": degree " + std::to_string(r.degree) + " does not match polynomial");
  if (!r.poly.is_monic()) fail(ErrorKind::parse, r.label + ": polynomial is not monic");
  return r;
}

json FieldRecord::to_json() const {
  json coeffs = json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(integer_to_json(c));
  return json{{"label", label},
              {"coeffs", std::move(coeffs)},
              {"degree", degree},
              {"disc_abs", integer_to_json(abs(disc))},
              {"disc_sign", sgn(disc) < 0 ? -1 : 1},
              {"galois_label", galois_label}};
}

json FixtureHeader::to_json() const {
  return json{{"fixture", "nf_fields"},
              {"snapshot_date", snapshot_date},
              {"source", source},
              {"query", query},
              {"record_count", record_count}};
}

Fixture parse_fixture(const std::string& text) {
  Fixture fx;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail(ErrorKind::parse, "fixture is empty");
  try {
    const json h = json::parse(line);
    fx.header.snapshot_date = h.at("snapshot_date").get<std::string>();
    fx.header.source = h.at("source").get<std::string>();
    fx.header.query = h.at("query");
    fx.header.record_count = h.at("record_count").get<std::size_t>();
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, std::string("bad fixture header: ") + e.what());
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      fx.records.push_back(FieldRecord::from_json(json::parse(line)));
    } catch (const json::exception& e) {
      fx.errors.push_back({lineno, e.what()});
    } catch (const Error& e) {
      fx.errors.push_back({lineno, e.what()});
    }
  }
  if (fx.errors.empty() && fx.records.size() != fx.header.record_count)
    fx.errors.push_back({1, "header announces " + std::to_string(fx.header.record_count) + " records, found " +
                                std::to_string(fx.records.size())});
  return fx;
}

Fixture read_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::invalid_argument, "cannot open fixture " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

std::string serialize_fixture(const FixtureHeader& header, std::span<const FieldRecord> records) {
  std::string out = header.to_json().dump() + "\n";
  for (const auto& r : records) out += r.to_json().dump() + "\n";
  return out;
}

// ---------------------------------------------------------------------------

std::string CandidateQuery::first_page_path() const {
  return "/api/nf_fields/?_format=json&degree=" + std::to_string(degree) + "&galois_label=" + galois_label +
         "&r2=" + std::to_string(r2) + "&_fields=label,coeffs,degree,disc_abs,disc_sign,galois_label" +
         "&_sort=disc_abs&_limit=" + std::to_string(page_size);
}

json CandidateQuery::to_json() const {
  return json{{"degree", degree}, {"galois_label", galois_label}, {"r2", r2}, {"ramified", ramified}, {"page_size", page_size}};
}

namespace {

class HttpTransport final : public Transport {
 public:
  HttpTransport(std::string base, HttpOptions opt)
      : base_(std::move(base)), opt_(opt), gate_(static_cast<std::ptrdiff_t>(std::clamp<std::size_t>(opt.max_in_flight, 1, 64))) {}

  Response get(const std::string& path) override {
    gate_.acquire();
    struct Release {
      std::counting_semaphore<64>& s;
      ~Release() { s.release(); }
    } release{gate_};
    httplib::Client client(base_);
    client.set_connection_timeout(opt_.timeout);
    client.set_read_timeout(opt_.timeout);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) return {0, "transport error: " + httplib::to_string(res.error())};
    return {res->status, res->body};
  }

 private:
  std::string base_;
  HttpOptions opt_;
  std::counting_semaphore<64> gate_;
};

bool retryable(int status) { return status == 0 || status == 429 || status >= 500; }

struct CrawlState {
  std::string next;
  std::vector<FieldRecord> records;
  std::vector<ParseIssue> errors;
  std::size_t pages = 0;
  std::size_t seen = 0;  // records received, including filtered and malformed ones
};

void save_state(const std::filesystem::path& path, const CandidateQuery& query, const CrawlState& st) {
  json j{{"query", query.to_json()}, {"next", st.next}, {"pages", st.pages}, {"seen", st.seen}};
  j["records"] = json::array();
  for (const auto& r : st.records) j["records"].push_back(r.to_json());
  j["errors"] = json::array();
  for (const auto& e : st.errors) j["errors"].push_back({{"index", e.index}, {"message", e.message}});
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::invalid_argument, "cannot write crawl state " + tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::optional<CrawlState> load_state(const std::filesystem::path& path, const CandidateQuery& query) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("query") != query.to_json()) return std::nullopt;
    CrawlState st;
    st.next = j.at("next").get<std::string>();
    st.pages = j.at("pages").get<std::size_t>();
    st.seen = j.at("seen").get<std::size_t>();
    for (const auto& r : j.at("records")) st.records.push_back(FieldRecord::from_json(r));
    for (const auto& e : j.at("errors")) st.errors.push_back({e.at("index").get<std::size_t>(), e.at("message").get<std::string>()});
    return st;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool has_ramified(const FieldRecord& r, const std::vector<long>& primes) {
  for (long p : primes)
    if (r.disc == 0 || mod(r.disc, Integer(p)) != 0) return false;
  return true;
}

}  // namespace

std::unique_ptr<Transport> make_http_transport(std::optional<std::string> base_url, HttpOptions options) {
  std::string base;
  if (base_url) {
    base = *base_url;
  } else if (const char* env = std::getenv("LMFDB_BASE_URL"); env && *env) {
    base = env;
  } else {
    base = "https://www.lmfdb.org";
  }
  while (!base.empty() && base.back() == '/') base.pop_back();
  return std::make_unique<HttpTransport>(std::move(base), options);
}

FetchResult fetch_candidates(Transport& transport, const CandidateQuery& query, const CrawlOptions& options) {
  if (options.max_attempts < 1) fail(ErrorKind::invalid_argument, "max_attempts must be >= 1");
  CrawlState st;
  bool resumed = false;
  if (options.state_path) {
    if (auto saved = load_state(*options.state_path, query)) {
      st = std::move(*saved);
      resumed = true;
    }
  }
  if (!resumed) st.next = query.first_page_path();

  while (!st.next.empty()) {
    Transport::Response res;
    auto backoff = options.initial_backoff;
    for (int attempt = 1;; ++attempt) {
      res = transport.get(st.next);
      if (res.status == 200) break;
      if (!retryable(res.status) || attempt >= options.max_attempts)
        fail(ErrorKind::transport, "GET " + st.next + " failed after " + std::to_string(attempt) +
                                       " attempt(s): status " + std::to_string(res.status) +
                                       (res.status == 0 ? " (" + res.body + ")" : ""));
      std::this_thread::sleep_for(backoff);
      backoff = std::min(options.max_backoff, backoff * 2);
    }
    json page;
    try {
      page = json::parse(res.body);
    } catch (const json::exception& e) {
      fail(ErrorKind::transport, "GET " + st.next + ": response is not JSON: " + e.what());
    }
    if (!page.contains("data") || !page["data"].is_array())
      fail(ErrorKind::transport, "GET " + st.next + ": response has no data array");
    for (const auto& item : page["data"]) {
      const std::size_t index = ++st.seen;
      try {
        FieldRecord r = FieldRecord::from_json(item);
        if (has_ramified(r, query.ramified)) st.records.push_back(std::move(r));
      } catch (const Error& e) {
        st.errors.push_back({index, e.what()});
      }
    }
    ++st.pages;
    st.next = (page.contains("next") && page["next"].is_string()) ? page["next"].get<std::string>() : "";
    if (options.state_path) save_state(*options.state_path, query, st);
  }
  if (options.state_path) std::filesystem::remove(*options.state_path);
  return {std::move(st.records), std::move(st.errors), st.pages, resumed};
}

FetchResult fetch_candidates(const std::filesystem::path& fixture) {
  Fixture fx = read_fixture(fixture);
  return {std::move(fx.records), std::move(fx.errors), 0, false};
}

FilterResult filter_by_theorem(std::span<const FieldRecord> records, long p, std::uint64_t sample_bound) {
  std::vector<std::optional<CertificateReport>> reports(records.size());
  std::vector<std::string> failures(records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < records.size(); k = next++) {
      try {
        reports[k] = certify_general_field(records[k].poly, p, sample_bound);
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                            static_cast<unsigned>(std::max<std::size_t>(records.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  FilterResult out;
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (!reports[k]) {
      out.errors.push_back({k + 1, records[k].label + ": " + failures[k]});
      continue;
    }
    CertifiedRecord cr{records[k], std::move(*reports[k])};
    switch (cr.report.overall) {
      case CertificateStatus::certified_evidence: out.pass.push_back(std::move(cr)); break;
      case CertificateStatus::failed: out.fail.push_back(std::move(cr)); break;
      case CertificateStatus::inconclusive: out.inconclusive.push_back(std::move(cr)); break;
    }
  }
  return out;
}

std::filesystem::path default_fixture_path() {
#ifdef ZPFLT_DEFAULT_FIXTURE
  return ZPFLT_DEFAULT_FIXTURE;
#else
  return "data/lmfdb_c5_fixture.ndjson";
#endif
}

}  // namespace zpflt::lmfdb
