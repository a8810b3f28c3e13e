#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "zpflt/arith/polynomial.hpp"
#include "zpflt/verdict.hpp"

namespace zpflt::lmfdb {

using json = nlohmann::json;

/// One row of the nf_fields collection, restricted to what the certifier needs.
struct FieldRecord {
  std::string label;
  IntPolynomial poly;
  int degree = 0;
  Integer disc;  // signed
  std::string galois_label;

  /// Throws parse on missing or inconsistent fields.
  static FieldRecord from_json(const json& j);
  json to_json() const;

  friend bool operator==(const FieldRecord&, const FieldRecord&) = default;
};

struct ParseIssue {
  std::size_t index;  // 1-based line in a fixture, running record index in a crawl
  std::string message;
};

struct FixtureHeader {
  std::string snapshot_date;
  std::string source;
  json query;
  std::size_t record_count = 0;

  json to_json() const;
};

/// Header line followed by one JSON record per line.
struct Fixture {
  FixtureHeader header;
  std::vector<FieldRecord> records;
  std::vector<ParseIssue> errors;
};

Fixture parse_fixture(const std::string& text);
Fixture read_fixture(const std::filesystem::path& path);
/// Inverse of parse_fixture for error-free fixtures, byte for byte.
std::string serialize_fixture(const FixtureHeader& header, std::span<const FieldRecord> records);

/// Search constraints forwarded to the API where it supports them.
struct CandidateQuery {
  int degree = 5;
  std::string galois_label = "5T1";
  int r2 = 0;                      // totally real
  std::vector<long> ramified{5};   // applied client-side on disc
  std::size_t page_size = 100;

  std::string first_page_path() const;
  json to_json() const;
};

/// GET path -> response body. Implementations throw Error(transport) on
/// failure and mark whether retrying makes sense.
class Transport {
 public:
  virtual ~Transport() = default;
  struct Response {
    int status = 0;
    std::string body;
  };
  virtual Response get(const std::string& path_and_query) = 0;
};

struct HttpOptions {
  std::chrono::seconds timeout{30};
  std::size_t max_in_flight = 2;
};

/// cpp-httplib client; base URL from the argument, else $LMFDB_BASE_URL,
/// else https://www.lmfdb.org.
std::unique_ptr<Transport> make_http_transport(std::optional<std::string> base_url = std::nullopt,
                                               HttpOptions options = {});

struct CrawlOptions {
  int max_attempts = 4;
  std::chrono::milliseconds initial_backoff{250};
  std::chrono::milliseconds max_backoff{4000};
  /// Crawl progress (next cursor + records so far) is saved here after each
  /// page; an existing state for the same query resumes the crawl.
  std::optional<std::filesystem::path> state_path;
};

struct FetchResult {
  std::vector<FieldRecord> records;
  std::vector<ParseIssue> errors;
  std::size_t pages = 0;
  bool resumed = false;
};

/// Follows the `next` cursor until exhausted. Transport failures after the
/// retry budget throw Error(transport); no partial result is returned.
FetchResult fetch_candidates(Transport& transport, const CandidateQuery& query, const CrawlOptions& options = {});

/// Fixture mode: the committed snapshot, parsed.
FetchResult fetch_candidates(const std::filesystem::path& fixture);

struct CertifiedRecord {
  FieldRecord record;
  CertificateReport report;
};

struct FilterResult {
  std::vector<CertifiedRecord> pass;
  std::vector<CertifiedRecord> fail;
  std::vector<CertifiedRecord> inconclusive;
  std::vector<ParseIssue> errors;
};

/// Certifies every record against the p-extension hypotheses (in parallel);
/// partitions keep input order.
FilterResult filter_by_theorem(std::span<const FieldRecord> records, long p = 5, std::uint64_t sample_bound = 100);

/// Path of the committed fixture compiled into the library.
std::filesystem::path default_fixture_path();

}  // namespace zpflt::lmfdb
