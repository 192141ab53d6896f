/*
 * Copyright 2026 The Memento Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "doctest.h"

#include <optional>
#include <string>
#include <vector>

#include "memento/chronicle_store.hpp"
#include "memento/linkrel.hpp"
#include "memento/server.hpp"

using namespace memento;

namespace {

Store fixture_store() {
  return Store::from_records({
      {"Daenerys_Targaryen", 1499, "20070422150120", "text/html", "Daenerys, first draft."},
      {"Daenerys_Targaryen", 27870, "20110629120000", "text/html", "Daenerys, midway."},
      {"Daenerys_Targaryen", 90020, "20130223015523", "text/html", "Daenerys, current."},
      {"Talk:Daenerys_Targaryen", 5, "20080101000000", "text/plain", "chatter"},
      {"Arya", 7, "20100605030201", "text/plain", "arya, only version"},
      {"A Song? #1", 3, "20120101000000", "text/html", "weird"},
      {"C++", 4, "20120101000000", "text/html", "plus"},
  });
}

ServerConfig test_config() {
  ServerConfig config;
  config.base_url = "http://wiki.example";
  config.error_page_type = ErrorPageType::Traditional;
  return config;
}

RequestView get(std::string target, std::optional<std::string> accept = std::nullopt) {
  RequestView request;
  request.target = std::move(target);
  request.accept_datetime = std::move(accept);
  return request;
}

const std::string kBase = "http://wiki.example";
const std::string kPage = kBase + "/wiki/Daenerys_Targaryen";

// Targets around the fixture history: revisions at 2007-04-22 15:01:20,
// 2011-06-29 12:00:00, and 2013-02-23 01:55:23.
const std::string kJun30 = "Thu, 30 Jun 2011 00:00:00 GMT";
const std::string kExactFirst = "Sun, 22 Apr 2007 15:01:20 GMT";
const std::string kBeforeFirst = "Mon, 01 Jan 2007 00:00:00 GMT";
const std::string kAfterLast = "Wed, 01 Jan 2014 00:00:00 GMT";

// Relation chains under the distinct-TimeGate pattern.
const std::string kOriginalLinks =
    "<http://wiki.example/wiki/Daenerys_Targaryen>; rel=\"original latest-version\","
    "<http://wiki.example/timegate/Daenerys_Targaryen>; rel=\"timegate\","
    "<http://wiki.example/timemap/Daenerys_Targaryen>; rel=\"timemap\"; "
    "type=\"application/link-format\"";

const std::string kGateLinks =
    "<http://wiki.example/timemap/Daenerys_Targaryen>; rel=\"timemap\"; "
    "type=\"application/link-format\","
    "<http://wiki.example/wiki/Daenerys_Targaryen>; rel=\"original latest-version\"";

// Relation chains under the at-page-URI pattern, where the page is its own
// negotiation endpoint and the roles merge into one entry.
const std::string kCombinedLinks =
    "<http://wiki.example/timemap/Daenerys_Targaryen>; rel=\"timemap\"; "
    "type=\"application/link-format\","
    "<http://wiki.example/wiki/Daenerys_Targaryen>; rel=\"original latest-version timegate\"";

const std::string kMementoCombinedLinks =
    "<http://wiki.example/wiki/Daenerys_Targaryen>; rel=\"original latest-version timegate\","
    "<http://wiki.example/timemap/Daenerys_Targaryen>; rel=\"timemap\"; "
    "type=\"application/link-format\"";

}  // namespace

TEST_CASE("routing: page, negotiation, and version map URIs") {
  ServerConfig config = test_config();

  auto r = route(config, "/wiki/Daenerys_Targaryen", false);
  REQUIRE(r);
  CHECK(r->kind == ResourceKind::OriginalDirect);
  CHECK(r->title == "Daenerys_Targaryen");

  r = route(config, "/wiki/Daenerys_Targaryen?rev=27870", false);
  REQUIRE(r);
  CHECK(r->kind == ResourceKind::MementoDirect);
  CHECK(r->rev_text == "27870");

  r = route(config, "/wiki/D?x=1&rev=2&rev=9&y=0", false);
  REQUIRE(r);
  CHECK(r->kind == ResourceKind::MementoDirect);
  CHECK(r->rev_text == "9");  // last assignment wins

  r = route(config, "/timegate/Daenerys_Targaryen", false);
  REQUIRE(r);
  CHECK(r->kind == ResourceKind::TimeGate302);
  CHECK(r->title == "Daenerys_Targaryen");

  CHECK(route(config, "/timegate", false)->title == "");
  CHECK(route(config, "/timegate/", false)->title == "");

  r = route(config, "/timemap/Daenerys_Targaryen", false);
  REQUIRE(r);
  CHECK(r->kind == ResourceKind::TimeMapFull);

  r = route(config, "/timemap/20130711203756/-1/Daenerys_Targaryen", false);
  REQUIRE(r);
  CHECK(r->kind == ResourceKind::TimeMapPivotDescending);
  CHECK(r->pivot_text == "20130711203756");
  CHECK(r->title == "Daenerys_Targaryen");

  r = route(config, "/timemap/20130711203756/1/A/B", false);
  REQUIRE(r);
  CHECK(r->kind == ResourceKind::TimeMapPivotAscending);
  CHECK(r->title == "A/B");  // titles keep their slashes

  CHECK_FALSE(route(config, "/", false));
  CHECK_FALSE(route(config, "/index.php/Daenerys", false));
  CHECK_FALSE(route(config, "/wikis/Daenerys", false));  // prefix ends at '/'
}

TEST_CASE("routing: percent escapes decode into titles, leniently") {
  ServerConfig config = test_config();
  CHECK(route(config, "/wiki/Daenerys%20Targaryen", false)->title == "Daenerys Targaryen");
  CHECK(route(config, "/wiki/Weird%3Fname", false)->title == "Weird?name");
  CHECK(route(config, "/wiki/100%25", false)->title == "100%");
  CHECK(route(config, "/wiki/50%2", false)->title == "50%2");  // bad escape stays literal
  CHECK(route(config, "/wiki/C++", false)->title == "C++");    // no form decoding
  CHECK(route(config, "/wiki/D#section", false)->title == "D");
}

TEST_CASE("routing: Accept-Datetime reroutes page URIs only under opt-in patterns") {
  ServerConfig p302 = test_config();
  CHECK(route(p302, "/wiki/D", true)->kind == ResourceKind::OriginalDirect);

  ServerConfig p200 = test_config();
  p200.negotiation_pattern = NegotiationPattern::P200;
  CHECK(route(p200, "/wiki/D", true)->kind == ResourceKind::Negotiated200);
  CHECK(route(p200, "/wiki/D", false)->kind == ResourceKind::OriginalDirect);
  CHECK(route(p200, "/wiki/D?rev=3", true)->kind == ResourceKind::MementoDirect);

  ServerConfig p11 = test_config();
  p11.experimental_pattern11 = true;
  CHECK(route(p11, "/wiki/D", true)->kind == ResourceKind::TimeGate302);
  CHECK(route(p11, "/wiki/D", false)->kind == ResourceKind::OriginalDirect);
  CHECK(route(p11, "/wiki/D?rev=3", true)->kind == ResourceKind::MementoDirect);
  CHECK(route(p11, "/wiki/", true)->kind == ResourceKind::OriginalDirect);
}

TEST_CASE("the page URI serves the newest content with the three-link chain") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  ResponseSpec response = service.handle(get("/wiki/Daenerys_Targaryen"));

  CHECK(response.status == 200);
  CHECK(response.content_type == "text/html");
  CHECK(response.body == "Daenerys, current.");
  REQUIRE(response.headers.size() == 1);
  CHECK(response.headers[0].first == "Link");
  CHECK(response.headers[0].second == kOriginalLinks);
  CHECK_FALSE(response.header("Vary"));
  CHECK_FALSE(response.header("Memento-Datetime"));
}

TEST_CASE("a pinned revision serves with its datetime and the same chain") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  ResponseSpec response = service.handle(get("/wiki/Daenerys_Targaryen?rev=1499"));

  CHECK(response.status == 200);
  CHECK(response.body == "Daenerys, first draft.");
  REQUIRE(response.headers.size() == 2);
  CHECK(response.headers[0] ==
        std::pair<std::string, std::string>{"Memento-Datetime",
                                            "Sun, 22 Apr 2007 15:01:20 GMT"});
  CHECK(response.headers[1].first == "Link");
  CHECK(response.headers[1].second == kOriginalLinks);
  CHECK_FALSE(response.header("Vary"));
}

TEST_CASE("the TimeGate answers 302 with Location, Vary, and its own chain") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  ResponseSpec response = service.handle(get("/timegate/Daenerys_Targaryen", kJun30));

  CHECK(response.status == 302);
  CHECK(response.body.empty());
  CHECK(response.content_type.empty());
  REQUIRE(response.headers.size() == 4);
  CHECK(response.headers[0] == std::pair<std::string, std::string>{"Vary", "Accept-Datetime"});
  CHECK(response.headers[1] ==
        std::pair<std::string, std::string>{"Location", kPage + "?rev=27870"});
  CHECK(response.headers[2] ==
        std::pair<std::string, std::string>{"Cache-Control", "no-store"});
  CHECK(response.headers[3].first == "Link");
  CHECK(response.headers[3].second == kGateLinks);
}

TEST_CASE("TimeGate selection: newest at or before, clamped to the first memento") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  auto location = [&](std::optional<std::string> accept) {
    ResponseSpec response = service.handle(get("/timegate/Daenerys_Targaryen", std::move(accept)));
    REQUIRE(response.status == 302);
    return *response.header("Location");
  };
  CHECK(location(kJun30) == kPage + "?rev=27870");
  CHECK(location(kExactFirst) == kPage + "?rev=1499");
  CHECK(location(kBeforeFirst) == kPage + "?rev=1499");
  CHECK(location(kAfterLast) == kPage + "?rev=90020");
  CHECK(location(std::nullopt) == kPage + "?rev=90020");  // no preference: newest
}

TEST_CASE("at-page-URI pattern: negotiation happens at the page itself, 200") {
  Store store = fixture_store();
  ServerConfig config = test_config();
  config.negotiation_pattern = NegotiationPattern::P200;
  MementoService service(store, config);

  ResponseSpec response = service.handle(get("/wiki/Daenerys_Targaryen", kExactFirst));
  CHECK(response.status == 200);
  CHECK(response.body == "Daenerys, first draft.");
  REQUIRE(response.headers.size() == 4);
  CHECK(response.headers[0] ==
        std::pair<std::string, std::string>{"Memento-Datetime",
                                            "Sun, 22 Apr 2007 15:01:20 GMT"});
  CHECK(response.headers[1] ==
        std::pair<std::string, std::string>{"Content-Location", kPage + "?rev=1499"});
  CHECK(response.headers[2].first == "Link");
  CHECK(response.headers[2].second == kCombinedLinks);
  CHECK(response.headers[3] == std::pair<std::string, std::string>{"Vary", "Accept-Datetime"});
}

TEST_CASE("at-page-URI pattern: the bare page still varies and merges roles") {
  Store store = fixture_store();
  ServerConfig config = test_config();
  config.negotiation_pattern = NegotiationPattern::P200;
  MementoService service(store, config);

  ResponseSpec response = service.handle(get("/wiki/Daenerys_Targaryen"));
  CHECK(response.status == 200);
  CHECK(response.body == "Daenerys, current.");
  REQUIRE(response.headers.size() == 2);
  CHECK(response.headers[0].first == "Link");
  CHECK(response.headers[0].second == kCombinedLinks);
  CHECK(response.headers[1] == std::pair<std::string, std::string>{"Vary", "Accept-Datetime"});
  CHECK_FALSE(response.header("Memento-Datetime"));
  CHECK_FALSE(response.header("Content-Location"));
}

TEST_CASE("at-page-URI pattern: pinned revisions do not vary") {
  Store store = fixture_store();
  ServerConfig config = test_config();
  config.negotiation_pattern = NegotiationPattern::P200;
  MementoService service(store, config);

  ResponseSpec response = service.handle(get("/wiki/Daenerys_Targaryen?rev=27870", kJun30));
  CHECK(response.status == 200);
  CHECK(response.body == "Daenerys, midway.");
  REQUIRE(response.headers.size() == 2);
  CHECK(response.headers[0] ==
        std::pair<std::string, std::string>{"Memento-Datetime",
                                            "Wed, 29 Jun 2011 12:00:00 GMT"});
  CHECK(response.headers[1].second == kMementoCombinedLinks);
  CHECK_FALSE(response.header("Vary"));
}

TEST_CASE("experimental at-page-URI redirect: header-bearing page requests answer 302") {
  Store store = fixture_store();
  ServerConfig config = test_config();
  config.experimental_pattern11 = true;
  MementoService service(store, config);

  ResponseSpec hit = service.handle(get("/wiki/Daenerys_Targaryen", kJun30));
  CHECK(hit.status == 302);
  CHECK(*hit.header("Location") == kPage + "?rev=27870");
  CHECK(*hit.header("Vary") == "Accept-Datetime");
  CHECK(*hit.header("Cache-Control") == "no-store");

  // The redirect target is a pinned revision, exempt from rerouting.
  ResponseSpec memento = service.handle(get("/wiki/Daenerys_Targaryen?rev=27870", kJun30));
  CHECK(memento.status == 200);
  CHECK(memento.body == "Daenerys, midway.");

  // Without the header the page behaves exactly as with the feature off.
  MementoService vanilla(store, test_config());
  CHECK(service.handle(get("/wiki/Daenerys_Targaryen")) ==
        vanilla.handle(get("/wiki/Daenerys_Targaryen")));
}

TEST_CASE("the bare negotiation endpoint explains itself") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  for (const char* target : {"/timegate", "/timegate/"}) {
    ResponseSpec response = service.handle(get(target));
    CHECK(response.status == 200);
    CHECK(response.content_type == "text/plain");
    CHECK(response.body.find("Accept-Datetime") != std::string::npos);
    CHECK(response.headers.empty());
  }
  // Usage wins over header validation: there is no page to negotiate on.
  CHECK(service.handle(get("/timegate/", "garbage")).status == 200);
}

TEST_CASE("traditional errors: real statuses with a code-and-reason body") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  auto expect = [&](RequestView request, int status, const std::string& body) {
    ResponseSpec response = service.handle(std::move(request));
    CHECK(response.status == status);
    CHECK(response.content_type == "text/plain");
    CHECK(response.body == body);
  };

  expect(get("/wiki/Missing"), 404, "404 Not Found: no page named 'Missing'\n");
  expect(get("/timegate/Missing", kJun30), 404, "404 Not Found: no page named 'Missing'\n");
  expect(get("/timemap/Missing"), 404, "404 Not Found: no page named 'Missing'\n");

  expect(get("/wiki/Talk:Daenerys_Targaryen"), 403,
         "403 Forbidden: datetime features are disabled for the 'Talk' namespace\n");
  expect(get("/timegate/Talk:Daenerys_Targaryen", kJun30), 403,
         "403 Forbidden: datetime features are disabled for the 'Talk' namespace\n");
  expect(get("/timemap/Talk:Daenerys_Targaryen"), 403,
         "403 Forbidden: datetime features are disabled for the 'Talk' namespace\n");

  expect(get("/timegate/Daenerys_Targaryen", "Mon, 30 Feb 2014 00:00:00 GMT"), 400,
         "400 Bad Request: Accept-Datetime names an impossible calendar date: "
         "'Mon, 30 Feb 2014 00:00:00 GMT'\n");
  expect(get("/timegate/Daenerys_Targaryen", "last tuesday"), 400,
         "400 Bad Request: Accept-Datetime is not a valid HTTP datetime: 'last tuesday'\n");

  expect(get("/timemap/20140230000000/-1/Daenerys_Targaryen"), 400,
         "400 Bad Request: pivot names an impossible calendar date: '20140230000000'\n");
  expect(get("/timemap/2014/-1/Daenerys_Targaryen"), 400,
         "400 Bad Request: pivot is not a 14-digit datetime: '2014'\n");

  expect(get("/wiki/Daenerys_Targaryen?rev=abc"), 400,
         "400 Bad Request: rev must be a non-negative integer, got 'abc'\n");
  expect(get("/wiki/Daenerys_Targaryen?rev="), 400,
         "400 Bad Request: rev must be a non-negative integer, got ''\n");
  expect(get("/wiki/Daenerys_Targaryen?rev=-5"), 400,
         "400 Bad Request: rev must be a non-negative integer, got '-5'\n");
  expect(get("/wiki/Daenerys_Targaryen?rev=99999999999999999999"), 400,
         "400 Bad Request: rev must be a non-negative integer, got "
         "'99999999999999999999'\n");
  expect(get("/wiki/Daenerys_Targaryen?rev=999"), 404,
         "404 Not Found: page 'Daenerys_Targaryen' has no revision 999\n");

  expect(get("/nope"), 404, "404 Not Found: no resource at '/nope'\n");
}

TEST_CASE("error precedence: exclusion beats existence beats request syntax") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  // Excluded namespaces reveal nothing, not even absence.
  CHECK(service.handle(get("/timegate/Talk:No_Such_Page", kJun30)).status == 403);
  CHECK(service.handle(get("/wiki/Talk:Daenerys_Targaryen?rev=abc")).status == 403);
  CHECK(service.handle(get("/timemap/2014/-1/Talk:Daenerys_Targaryen")).status == 403);
  // Missing pages answer before the request is inspected further.
  CHECK(service.handle(get("/wiki/Missing?rev=abc")).status == 404);
  CHECK(service.handle(get("/timemap/2014/-1/Missing")).status == 404);
  CHECK(service.handle(get("/timegate/Missing", "garbage")).status == 404);
}

TEST_CASE("friendly errors: 200 with the code in X-Memento-Error and a marker line") {
  Store store = fixture_store();
  ServerConfig config = test_config();
  config.error_page_type = ErrorPageType::Friendly;
  MementoService service(store, config);

  ResponseSpec missing = service.handle(get("/wiki/Missing"));
  CHECK(missing.status == 200);
  CHECK(*missing.header("X-Memento-Error") == "404");
  CHECK(missing.body.find("no page named 'Missing'") != std::string::npos);
  CHECK(missing.body.find("X-Memento-Error: 404 Not Found") != std::string::npos);

  ResponseSpec forbidden = service.handle(get("/wiki/Talk:Daenerys_Targaryen"));
  CHECK(forbidden.status == 200);
  CHECK(*forbidden.header("X-Memento-Error") == "403");

  ResponseSpec bad = service.handle(get("/timegate/Daenerys_Targaryen", "garbage"));
  CHECK(bad.status == 200);
  CHECK(*bad.header("X-Memento-Error") == "400");
}

TEST_CASE("the error mode never changes successful responses") {
  Store store = fixture_store();
  ServerConfig traditional = test_config();
  ServerConfig friendly = test_config();
  friendly.error_page_type = ErrorPageType::Friendly;
  MementoService a(store, traditional);
  MementoService b(store, friendly);

  const std::vector<RequestView> successes = {
      get("/wiki/Daenerys_Targaryen"),
      get("/wiki/Daenerys_Targaryen?rev=27870"),
      get("/timegate/Daenerys_Targaryen", kJun30),
      get("/timegate/Daenerys_Targaryen"),
      get("/timegate"),
      get("/timemap/Daenerys_Targaryen"),
      get("/timemap/20130223015523/-1/Daenerys_Targaryen"),
  };
  for (const RequestView& request : successes) {
    CAPTURE(request.target);
    CHECK(a.handle(request) == b.handle(request));
  }
}

TEST_CASE("render_error covers the server fault case too") {
  ResponseSpec oops = render_error(ErrorKind::Internal500, "store exploded",
                                   ErrorPageType::Traditional);
  CHECK(oops.status == 500);
  CHECK(oops.body == "500 Internal Server Error: store exploded\n");
  ResponseSpec soft = render_error(ErrorKind::Internal500, "store exploded",
                                   ErrorPageType::Friendly);
  CHECK(soft.status == 200);
  CHECK(*soft.header("X-Memento-Error") == "500");
}

TEST_CASE("Vary: Accept-Datetime appears exactly where negotiation can happen") {
  Store store = fixture_store();
  auto vary = [](const ResponseSpec& response) {
    return response.header("Vary").has_value();
  };

  MementoService p302(store, test_config());
  CHECK_FALSE(vary(p302.handle(get("/wiki/Daenerys_Targaryen"))));
  CHECK_FALSE(vary(p302.handle(get("/wiki/Daenerys_Targaryen", kJun30))));
  CHECK_FALSE(vary(p302.handle(get("/wiki/Daenerys_Targaryen?rev=1499"))));
  CHECK(vary(p302.handle(get("/timegate/Daenerys_Targaryen", kJun30))));
  CHECK(vary(p302.handle(get("/timegate/Daenerys_Targaryen"))));
  CHECK_FALSE(vary(p302.handle(get("/timemap/Daenerys_Targaryen"))));
  CHECK_FALSE(vary(p302.handle(get("/timegate"))));
  CHECK_FALSE(vary(p302.handle(get("/wiki/Missing"))));

  ServerConfig at_page = test_config();
  at_page.negotiation_pattern = NegotiationPattern::P200;
  MementoService p200(store, at_page);
  CHECK(vary(p200.handle(get("/wiki/Daenerys_Targaryen"))));
  CHECK(vary(p200.handle(get("/wiki/Daenerys_Targaryen", kJun30))));
  CHECK_FALSE(vary(p200.handle(get("/wiki/Daenerys_Targaryen?rev=1499", kJun30))));
  CHECK_FALSE(vary(p200.handle(get("/timemap/Daenerys_Targaryen"))));

  ServerConfig experimental = test_config();
  experimental.experimental_pattern11 = true;
  MementoService p11(store, experimental);
  CHECK(vary(p11.handle(get("/wiki/Daenerys_Targaryen", kJun30))));
  CHECK_FALSE(vary(p11.handle(get("/wiki/Daenerys_Targaryen"))));
}

TEST_CASE("Memento-Datetime appears exactly on memento content") {
  Store store = fixture_store();
  auto stamped = [](const ResponseSpec& response) {
    return response.header("Memento-Datetime").has_value();
  };
  MementoService p302(store, test_config());
  CHECK_FALSE(stamped(p302.handle(get("/wiki/Daenerys_Targaryen"))));
  CHECK(stamped(p302.handle(get("/wiki/Daenerys_Targaryen?rev=1499"))));
  CHECK_FALSE(stamped(p302.handle(get("/timegate/Daenerys_Targaryen", kJun30))));
  CHECK_FALSE(stamped(p302.handle(get("/timemap/Daenerys_Targaryen"))));

  ServerConfig at_page = test_config();
  at_page.negotiation_pattern = NegotiationPattern::P200;
  MementoService p200(store, at_page);
  CHECK(stamped(p200.handle(get("/wiki/Daenerys_Targaryen", kJun30))));
  CHECK_FALSE(stamped(p200.handle(get("/wiki/Daenerys_Targaryen"))));
}

TEST_CASE("the full version map lists every memento with self and chain entries") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  ResponseSpec response = service.handle(get("/timemap/Daenerys_Targaryen"));

  CHECK(response.status == 200);
  CHECK(response.content_type == "application/link-format");
  CHECK(response.body ==
        "<http://wiki.example/timemap/Daenerys_Targaryen>; rel=\"self\"; "
        "type=\"application/link-format\"; from=\"Sun, 22 Apr 2007 15:01:20 GMT\"; "
        "until=\"Sat, 23 Feb 2013 01:55:23 GMT\",\n"
        "<http://wiki.example/timegate/Daenerys_Targaryen>; rel=\"timegate\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen>; rel=\"original latest-version\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen?rev=1499>; rel=\"memento\"; "
        "datetime=\"Sun, 22 Apr 2007 15:01:20 GMT\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen?rev=27870>; rel=\"memento\"; "
        "datetime=\"Wed, 29 Jun 2011 12:00:00 GMT\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen?rev=90020>; rel=\"memento\"; "
        "datetime=\"Sat, 23 Feb 2013 01:55:23 GMT\"\n");
}

TEST_CASE("a descending pivot page carries an ascending neighbor toward newer mementos") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  ResponseSpec response =
      service.handle(get("/timemap/20130223015523/-1/Daenerys_Targaryen"));

  CHECK(response.status == 200);
  CHECK(response.body ==
        "<http://wiki.example/timemap/20130223015523/-1/Daenerys_Targaryen>; rel=\"self\"; "
        "type=\"application/link-format\"; from=\"Sun, 22 Apr 2007 15:01:20 GMT\"; "
        "until=\"Wed, 29 Jun 2011 12:00:00 GMT\",\n"
        "<http://wiki.example/timemap/20110629120000/1/Daenerys_Targaryen>; rel=\"timemap\"; "
        "type=\"application/link-format\"; from=\"Sat, 23 Feb 2013 01:55:23 GMT\"; "
        "until=\"Sat, 23 Feb 2013 01:55:23 GMT\",\n"
        "<http://wiki.example/timegate/Daenerys_Targaryen>; rel=\"timegate\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen>; rel=\"original latest-version\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen?rev=1499>; rel=\"memento\"; "
        "datetime=\"Sun, 22 Apr 2007 15:01:20 GMT\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen?rev=27870>; rel=\"memento\"; "
        "datetime=\"Wed, 29 Jun 2011 12:00:00 GMT\"\n");
}

TEST_CASE("an ascending pivot page carries a descending neighbor toward older mementos") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  ResponseSpec response =
      service.handle(get("/timemap/20070422150120/1/Daenerys_Targaryen"));

  CHECK(response.status == 200);
  CHECK(response.body ==
        "<http://wiki.example/timemap/20070422150120/1/Daenerys_Targaryen>; rel=\"self\"; "
        "type=\"application/link-format\"; from=\"Wed, 29 Jun 2011 12:00:00 GMT\"; "
        "until=\"Sat, 23 Feb 2013 01:55:23 GMT\",\n"
        "<http://wiki.example/timemap/20110629120000/-1/Daenerys_Targaryen>; rel=\"timemap\"; "
        "type=\"application/link-format\"; from=\"Sun, 22 Apr 2007 15:01:20 GMT\"; "
        "until=\"Sun, 22 Apr 2007 15:01:20 GMT\",\n"
        "<http://wiki.example/timegate/Daenerys_Targaryen>; rel=\"timegate\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen>; rel=\"original latest-version\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen?rev=27870>; rel=\"memento\"; "
        "datetime=\"Wed, 29 Jun 2011 12:00:00 GMT\",\n"
        "<http://wiki.example/wiki/Daenerys_Targaryen?rev=90020>; rel=\"memento\"; "
        "datetime=\"Sat, 23 Feb 2013 01:55:23 GMT\"\n");
}

TEST_CASE("pivot pages with nothing on that side answer 404 with the direction") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  ResponseSpec before = service.handle(get("/timemap/20070422150120/-1/Daenerys_Targaryen"));
  CHECK(before.status == 404);
  CHECK(before.body ==
        "404 Not Found: page 'Daenerys_Targaryen' has no mementos before "
        "Sun, 22 Apr 2007 15:01:20 GMT\n");
  ResponseSpec after = service.handle(get("/timemap/20130223015523/1/Daenerys_Targaryen"));
  CHECK(after.status == 404);
  CHECK(after.body ==
        "404 Not Found: page 'Daenerys_Targaryen' has no mementos after "
        "Sat, 23 Feb 2013 01:55:23 GMT\n");
}

TEST_CASE("page size clips the window and neighbors describe their own pages") {
  Store store = fixture_store();
  ServerConfig config = test_config();
  config.timemap_page_size = 1;
  MementoService service(store, config);
  ResponseSpec response = service.handle(get("/timemap/Daenerys_Targaryen"));

  CHECK(response.body.find("rev=90020") != std::string::npos);
  CHECK(response.body.find("rev=27870") == std::string::npos);
  CHECK(response.body.find("rev=1499") == std::string::npos);
  // The older neighbor is itself one entry wide: rev 27870 only.
  CHECK(response.body.find(
            "<http://wiki.example/timemap/20130223015523/-1/Daenerys_Targaryen>; "
            "rel=\"timemap\"; type=\"application/link-format\"; "
            "from=\"Wed, 29 Jun 2011 12:00:00 GMT\"; "
            "until=\"Wed, 29 Jun 2011 12:00:00 GMT\"") != std::string::npos);
}

TEST_CASE("endpoint relations are opt-in on page, gate, and memento answers") {
  Store store = fixture_store();
  ServerConfig config = test_config();
  config.recommended_relations = true;
  MementoService service(store, config);

  const std::string endpoints =
      ",<http://wiki.example/wiki/Daenerys_Targaryen?rev=1499>; rel=\"memento first\"; "
      "datetime=\"Sun, 22 Apr 2007 15:01:20 GMT\","
      "<http://wiki.example/wiki/Daenerys_Targaryen?rev=90020>; rel=\"memento last\"; "
      "datetime=\"Sat, 23 Feb 2013 01:55:23 GMT\"";

  CHECK(*service.handle(get("/wiki/Daenerys_Targaryen")).header("Link") ==
        kOriginalLinks + endpoints);
  CHECK(*service.handle(get("/wiki/Daenerys_Targaryen?rev=27870")).header("Link") ==
        kOriginalLinks + endpoints);
  CHECK(*service.handle(get("/timegate/Daenerys_Targaryen", kJun30)).header("Link") ==
        kGateLinks + endpoints);

  // A single-revision history merges the two endpoints into one entry.
  CHECK(*service.handle(get("/wiki/Arya")).header("Link") ==
        "<http://wiki.example/wiki/Arya>; rel=\"original latest-version\","
        "<http://wiki.example/timegate/Arya>; rel=\"timegate\","
        "<http://wiki.example/timemap/Arya>; rel=\"timemap\"; "
        "type=\"application/link-format\","
        "<http://wiki.example/wiki/Arya?rev=7>; rel=\"memento first last\"; "
        "datetime=\"Sat, 05 Jun 2010 03:02:01 GMT\"");
}

TEST_CASE("endpoint relations flow into version maps") {
  Store store = fixture_store();
  ServerConfig config = test_config();
  config.recommended_relations = true;
  MementoService service(store, config);

  ResponseSpec response = service.handle(get("/timemap/Arya"));
  CHECK(response.body ==
        "<http://wiki.example/timemap/Arya>; rel=\"self\"; "
        "type=\"application/link-format\"; from=\"Sat, 05 Jun 2010 03:02:01 GMT\"; "
        "until=\"Sat, 05 Jun 2010 03:02:01 GMT\",\n"
        "<http://wiki.example/timegate/Arya>; rel=\"timegate\",\n"
        "<http://wiki.example/wiki/Arya>; rel=\"original latest-version\",\n"
        "<http://wiki.example/wiki/Arya?rev=7>; rel=\"memento first last\"; "
        "datetime=\"Sat, 05 Jun 2010 03:02:01 GMT\"\n");

  ResponseSpec daenerys = service.handle(get("/timemap/Daenerys_Targaryen"));
  CHECK(daenerys.body.find("rev=1499>; rel=\"memento first\"") != std::string::npos);
  CHECK(daenerys.body.find("rev=90020>; rel=\"memento last\"") != std::string::npos);
}

TEST_CASE("namespace exclusion follows the configured list") {
  Store store = fixture_store();
  ServerConfig open = test_config();
  open.exclude_all_namespaces = false;
  MementoService service(store, open);
  ResponseSpec talk = service.handle(get("/wiki/Talk:Daenerys_Targaryen"));
  CHECK(talk.status == 200);
  CHECK(talk.body == "chatter");
  CHECK(service.handle(get("/timemap/Talk:Daenerys_Targaryen")).status == 200);

  ServerConfig listed = test_config();
  listed.exclude_all_namespaces = false;
  listed.excluded_namespaces = {"Talk"};
  MementoService strict(store, listed);
  CHECK(strict.handle(get("/wiki/Talk:Daenerys_Targaryen")).status == 403);
}

TEST_CASE("titles with reserved characters survive the URI round trip") {
  Store store = fixture_store();
  MementoService service(store, test_config());

  ResponseSpec response = service.handle(get("/wiki/A%20Song%3F%20%231"));
  CHECK(response.status == 200);
  CHECK(response.body == "weird");

  std::string gate;
  for (const LinkEntry& entry : parse_link(*response.header("Link"))) {
    if (entry.has_rel("timegate")) gate = entry.target;
  }
  CHECK(gate == "http://wiki.example/timegate/A%20Song%3F%20%231");

  auto back = route(service.config(), gate.substr(kBase.size()), false);
  REQUIRE(back);
  CHECK(back->kind == ResourceKind::TimeGate302);
  CHECK(back->title == "A Song? #1");

  CHECK(service.handle(get("/wiki/C++")).body == "plus");
}

TEST_CASE("every Link header and version map the service emits parses cleanly") {
  Store store = fixture_store();
  for (NegotiationPattern pattern : {NegotiationPattern::P302, NegotiationPattern::P200}) {
    for (bool endpoints : {false, true}) {
      ServerConfig config = test_config();
      config.negotiation_pattern = pattern;
      config.recommended_relations = endpoints;
      MementoService service(store, config);
      const std::vector<RequestView> requests = {
          get("/wiki/Daenerys_Targaryen"),
          get("/wiki/Daenerys_Targaryen", kJun30),
          get("/wiki/Daenerys_Targaryen?rev=1499"),
          get("/timegate/Daenerys_Targaryen", kJun30),
          get("/timemap/Daenerys_Targaryen"),
          get("/timemap/20130223015523/-1/Daenerys_Targaryen"),
          get("/wiki/Arya"),
          get("/timemap/Arya"),
      };
      for (const RequestView& request : requests) {
        CAPTURE(request.target);
        ResponseSpec response = service.handle(request);
        REQUIRE((response.status == 200 || response.status == 302));
        if (auto link = response.header("Link")) {
          CHECK_FALSE(parse_link(*link).empty());
        }
        if (response.content_type == "application/link-format") {
          CHECK_FALSE(parse_link(response.body).empty());
        }
      }
    }
  }
}

TEST_CASE("HEAD is GET without a body, decided identically") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  RequestView head = get("/timegate/Daenerys_Targaryen", kJun30);
  head.method = "HEAD";
  CHECK(service.handle(head) == service.handle(get("/timegate/Daenerys_Targaryen", kJun30)));
}

TEST_CASE("other methods are refused with Allow") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  for (const char* method : {"POST", "PUT", "DELETE", "PATCH", "OPTIONS"}) {
    RequestView request = get("/wiki/Daenerys_Targaryen");
    request.method = method;
    ResponseSpec response = service.handle(request);
    CHECK(response.status == 405);
    CHECK(*response.header("Allow") == "GET, HEAD");
  }
}

TEST_CASE("rev id zero is a lookup miss, not a syntax error") {
  Store store = fixture_store();
  MementoService service(store, test_config());
  ResponseSpec response = service.handle(get("/wiki/Daenerys_Targaryen?rev=0"));
  CHECK(response.status == 404);
}
