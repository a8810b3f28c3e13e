#include <doctest.h>

#include <httplib.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "zpflt/error.hpp"
#include "zpflt/lmfdb.hpp"

using namespace zpflt;
using namespace zpflt::lmfdb;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Local stand-in for the nf_fields endpoint serving `data` in pages.
class FakeApi {
 public:
  explicit FakeApi(std::vector<json> data, std::size_t page = 40) : data_(std::move(data)), page_(page) {
    server_.Get("/api/nf_fields/", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests;
      const std::size_t offset = req.has_param("_offset") ? std::stoul(req.get_param_value("_offset")) : 0;
      if (offset > 0 && fail_after_first.load() > 0) {
        --fail_after_first;
        res.status = 503;
        return;
      }
      if (hard_status.load() != 0) {
        res.status = hard_status.load();
        return;
      }
      json body{{"data", json::array()}};
      for (std::size_t k = offset; k < std::min(offset + page_, data_.size()); ++k) body["data"].push_back(data_[k]);
      if (offset + page_ < data_.size())
        body["next"] = "/api/nf_fields/?_format=json&_offset=" + std::to_string(offset + page_);
      res.set_content(body.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeApi() {
    server_.stop();
    thread_.join();
  }
  std::string base() const { return "http://127.0.0.1:" + std::to_string(port_); }

  std::atomic<int> requests{0};
  std::atomic<int> fail_after_first{0};
  std::atomic<int> hard_status{0};

 private:
  std::vector<json> data_;
  std::size_t page_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

CrawlOptions fast_retry() {
  CrawlOptions o;
  o.initial_backoff = std::chrono::milliseconds(1);
  o.max_backoff = std::chrono::milliseconds(4);
  return o;
}

std::vector<json> fixture_json(const Fixture& fx) {
  std::vector<json> out;
  for (const auto& r : fx.records) out.push_back(r.to_json());
  return out;
}

}  // namespace

TEST_SUITE("lmfdb-client") {

TEST_CASE("record parsing") {
  const json good = json::parse(
      R"({"label":"5.5.390625.1","coeffs":[1,10,5,-10,0,1],"degree":5,"disc_abs":390625,"disc_sign":1,"galois_label":"5T1"})");
  const auto r = FieldRecord::from_json(good);
  CHECK(r.degree == 5);
  CHECK(r.disc == 390625);
  CHECK(FieldRecord::from_json(r.to_json()) == r);
  json big = good;
  big["disc_abs"] = "123456789012345678901234567890";
  big["disc_sign"] = -1;
  CHECK(FieldRecord::from_json(big).disc == Integer("-123456789012345678901234567890"));
  CHECK(FieldRecord::from_json(FieldRecord::from_json(big).to_json()) == FieldRecord::from_json(big));
  for (const char* key : {"label", "coeffs", "disc_abs"}) {
    json bad = good;
    bad.erase(key);
    CHECK_THROWS_AS(FieldRecord::from_json(bad), Error);
  }
  json wrong_degree = good;
  wrong_degree["degree"] = 4;
  CHECK_THROWS_AS(FieldRecord::from_json(wrong_degree), Error);
  json bad_sign = good;
  bad_sign["disc_sign"] = 0;
  CHECK_THROWS_AS(FieldRecord::from_json(bad_sign), Error);
  CHECK_THROWS_AS(FieldRecord::from_json(json::array()), Error);
}

TEST_CASE("committed fixture") {
  const std::string text = slurp(ZPFLT_TEST_FIXTURE);
  const Fixture fx = parse_fixture(text);
  CHECK(fx.errors.empty());
  CHECK(fx.records.size() == 153);
  CHECK(fx.header.record_count == 153);
  CHECK_FALSE(fx.header.snapshot_date.empty());
  CHECK(serialize_fixture(fx.header, fx.records) == text);
  for (const auto& r : fx.records) {
    REQUIRE(FieldRecord::from_json(r.to_json()) == r);
    REQUIRE(r.degree == 5);
    REQUIRE(r.galois_label == "5T1");
  }
  CHECK(default_fixture_path() == std::filesystem::path(ZPFLT_TEST_FIXTURE));
  CHECK(fetch_candidates(std::filesystem::path(ZPFLT_TEST_FIXTURE)).records == fx.records);
}

TEST_CASE("malformed fixture lines are collected") {
  std::string text = slurp(ZPFLT_TEST_FIXTURE);
  const auto second = text.find('\n') + 1;
  text.insert(second, "{\"label\":\"junk\"}\nnot json\n");
  const Fixture fx = parse_fixture(text);
  CHECK(fx.records.size() == 153);
  REQUIRE(fx.errors.size() == 2);
  CHECK(fx.errors[0].index == 2);
  CHECK(fx.errors[1].index == 3);
  CHECK_THROWS_AS(parse_fixture(""), Error);
  CHECK_THROWS_AS(read_fixture("/nonexistent/fixture.ndjson"), Error);
}

TEST_CASE("filter over the fixture is deterministic and ordered") {
  const Fixture fx = read_fixture(ZPFLT_TEST_FIXTURE);
  const auto a = filter_by_theorem(fx.records);
  const auto b = filter_by_theorem(fx.records);
  CHECK(a.pass.size() == 153);
  REQUIRE(a.pass.size() == b.pass.size());
  for (std::size_t k = 0; k < a.pass.size(); ++k) {
    CHECK(a.pass[k].record == fx.records[k]);
    CHECK(a.pass[k].record == b.pass[k].record);
  }
  std::vector<FieldRecord> mixed{fx.records[0], FieldRecord{"x", parse_coefficients("-2,0,0,0,0,1"), 5, 50000, "5T1"}};
  const auto m = filter_by_theorem(mixed);
  CHECK(m.pass.size() == 1);
  CHECK(m.fail.size() == 1);
}

TEST_CASE("paginated crawl over HTTP") {
  const Fixture fx = read_fixture(ZPFLT_TEST_FIXTURE);
  auto data = fixture_json(fx);
  // one record unramified at 5 and one malformed record
  data.insert(data.begin() + 7, json::parse(
      R"({"label":"5.5.14641.1","coeffs":[-1,3,3,-4,-1,1],"degree":5,"disc_abs":14641,"disc_sign":1,"galois_label":"5T1"})"));
  data.insert(data.begin() + 50, json{{"label", "broken"}});
  FakeApi api(data);
  auto transport = make_http_transport(api.base());
  const auto res = fetch_candidates(*transport, CandidateQuery{}, fast_retry());
  CHECK(res.pages == 4);
  CHECK_FALSE(res.resumed);
  REQUIRE(res.records.size() == 153);
  CHECK(res.records == fx.records);
  REQUIRE(res.errors.size() == 1);
  CHECK(res.errors[0].index == 51);
}

TEST_CASE("transient failures are retried") {
  FakeApi api(fixture_json(read_fixture(ZPFLT_TEST_FIXTURE)));
  api.fail_after_first = 2;
  auto transport = make_http_transport(api.base());
  const auto res = fetch_candidates(*transport, CandidateQuery{}, fast_retry());
  CHECK(res.records.size() == 153);
  CHECK(api.requests.load() == 4 + 2);
}

TEST_CASE("exhausted retries and client errors fail without partial results") {
  FakeApi api(fixture_json(read_fixture(ZPFLT_TEST_FIXTURE)));
  auto transport = make_http_transport(api.base());
  api.fail_after_first = 100;
  try {
    fetch_candidates(*transport, CandidateQuery{}, fast_retry());
    FAIL("expected transport error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::transport);
  }
  CHECK(api.requests.load() == 1 + 4);
  api.fail_after_first = 0;
  api.hard_status = 404;
  api.requests = 0;
  CHECK_THROWS_AS(fetch_candidates(*transport, CandidateQuery{}, fast_retry()), Error);
  CHECK(api.requests.load() == 1);
}

TEST_CASE("connection failure is a transport error") {
  auto transport = make_http_transport("http://127.0.0.1:1", HttpOptions{std::chrono::seconds(2), 1});
  try {
    fetch_candidates(*transport, CandidateQuery{}, fast_retry());
    FAIL("expected transport error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::transport);
  }
}

TEST_CASE("interrupted crawl resumes from the state file") {
  const Fixture fx = read_fixture(ZPFLT_TEST_FIXTURE);
  FakeApi api(fixture_json(fx));
  auto transport = make_http_transport(api.base());
  const auto state = std::filesystem::temp_directory_path() / "zpflt_crawl_state_test.json";
  std::filesystem::remove(state);
  CrawlOptions opt = fast_retry();
  opt.state_path = state;

  api.fail_after_first = 100;
  CHECK_THROWS_AS(fetch_candidates(*transport, CandidateQuery{}, opt), Error);
  CHECK(std::filesystem::exists(state));

  api.fail_after_first = 0;
  api.requests = 0;
  const auto res = fetch_candidates(*transport, CandidateQuery{}, opt);
  CHECK(res.resumed);
  CHECK(res.records == fx.records);
  CHECK(api.requests.load() == 3);  // first page came from the state file
  CHECK_FALSE(std::filesystem::exists(state));

  // a state file for a different query is ignored
  CandidateQuery other;
  other.page_size = 40;
  api.fail_after_first = 100;
  CHECK_THROWS_AS(fetch_candidates(*transport, other, opt), Error);
  api.fail_after_first = 0;
  CHECK_FALSE(fetch_candidates(*transport, CandidateQuery{}, opt).resumed);
}

TEST_CASE("endpoint override from the environment") {
  FakeApi api(fixture_json(read_fixture(ZPFLT_TEST_FIXTURE)));
  ::setenv("LMFDB_BASE_URL", api.base().c_str(), 1);
  auto transport = make_http_transport();
  ::unsetenv("LMFDB_BASE_URL");
  CHECK(fetch_candidates(*transport, CandidateQuery{}, fast_retry()).records.size() == 153);
}

}  // TEST_SUITE
