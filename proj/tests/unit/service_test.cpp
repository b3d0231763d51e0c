// Copyright 2026 The pausegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "fixtures.hpp"
#include "pausegraph/generator.hpp"
#include "pausegraph/service.hpp"
#include "pausegraph/wire.hpp"

namespace pausegraph {
namespace {

using wire::Json;

struct Reply {
  int status;
  Json body;
  const Json& data() const { return body.at("data"); }
  std::string code() const { return body.at("error").at("code").get<std::string>(); }
};

class ServiceTest : public ::testing::Test {
 protected:
  ServiceTest() : svc_(ServiceOptions{dir_.path(), [] { return std::int64_t{1700000000}; }}) {
    svc_.add_dataset(pgtest::load_g0());
  }

  Reply call(std::string_view method, std::string_view target, std::string_view body = "") {
    auto r = svc_.route(method, target, body);
    return Reply{r.status, wire::parse(r.body, ErrorCode::kIoError)};
  }

  std::string create(std::string_view body) {
    auto r = call("POST", "/api/sessions", body);
    EXPECT_EQ(r.status, 201) << r.body.dump();
    return r.data().at("session_id").get<std::string>();
  }

  std::string create_age_scan() {
    return create(
        R"({"dataset":"g0","spec":{"kind":"vertex-scan"},)"
        R"("breakpoints":[{"conjuncts":[{"attr":"age","op":"gt","value":{"t":"int","v":21}}]}]})");
  }

  pgtest::TempDir dir_;
  Service svc_;
};

TEST_F(ServiceTest, ListsDatasets) {
  auto r = call("GET", "/api/datasets");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.data().dump(), R"([{"name":"g0","vertex_count":5,"edge_count":5,"version":0}])");
}

TEST_F(ServiceTest, SessionLifecycle) {
  const auto id = create_age_scan();
  EXPECT_EQ(id, "s-000001");

  auto s = call("GET", "/api/sessions/" + id);
  EXPECT_EQ(s.data().dump(), R"({"status":"created","records_processed":0,"last_event":null})");

  auto c = call("POST", "/api/sessions/" + id + "/continue");
  EXPECT_EQ(c.status, 200);
  EXPECT_EQ(c.data().dump(), R"({"kind":"match","class":"vertex","id":1,"type":"person","depth":null})");
  EXPECT_EQ(call("GET", "/api/sessions/" + id).data().at("records_processed"), 2);

  call("POST", "/api/sessions/" + id + "/continue");
  call("POST", "/api/sessions/" + id + "/continue");
  auto done = call("POST", "/api/sessions/" + id + "/continue");
  EXPECT_EQ(done.data().dump(), R"({"kind":"done","reason":"exhausted"})");
  auto status = call("GET", "/api/sessions/" + id).data();
  EXPECT_EQ(status.at("status"), "done");
  EXPECT_EQ(status.at("records_processed"), 5);

  auto again = call("POST", "/api/sessions/" + id + "/continue");
  EXPECT_EQ(again.status, 409);
  EXPECT_EQ(again.code(), "session_terminal");

  auto stop = call("POST", "/api/sessions/" + id + "/stop");
  EXPECT_EQ(stop.data().dump(), R"({"status":"stopped"})");
}

TEST_F(ServiceTest, GetIsStateless) {
  const auto id = create_age_scan();
  call("POST", "/api/sessions/" + id + "/continue");
  const auto first = call("GET", "/api/sessions/" + id).body;
  for (int i = 0; i < 5; ++i) EXPECT_EQ(call("GET", "/api/sessions/" + id).body, first);
}

TEST_F(ServiceTest, ErrorStatuses) {
  EXPECT_EQ(call("GET", "/api/sessions/s-999999").status, 404);
  EXPECT_EQ(call("GET", "/api/sessions/s-999999").code(), "unknown_session");
  EXPECT_EQ(call("POST", "/api/sessions", R"({"dataset":"nope","spec":{"kind":"bfs"}})").code(),
            "unknown_dataset");
  EXPECT_EQ(call("GET", "/api/bookmarks/bm-x").code(), "unknown_bookmark");
  EXPECT_EQ(call("GET", "/api/nothing").status, 404);

  auto bad = call("POST", "/api/sessions",
                  R"({"dataset":"g0","spec":{"kind":"vertex-scan"},)"
                  R"("breakpoints":[{"conjuncts":[{"attr":"height","op":"gt","value":{"t":"int","v":1}}]}]})");
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(bad.code(), "invalid_predicate");
  EXPECT_NE(bad.body.at("error").at("message").get<std::string>().find("conjunct 0"), std::string::npos);

  EXPECT_EQ(call("POST", "/api/sessions", "{not json").code(), "invalid_spec");
  auto dead = call("POST", "/api/sessions",
                   R"({"dataset":"g0","spec":{"kind":"bfs","start":17}})");
  EXPECT_EQ(dead.status, 410);
  EXPECT_EQ(dead.code(), "dead_element");
  // Rejected creations do not consume ids.
  EXPECT_EQ(create_age_scan(), "s-000001");
}

TEST_F(ServiceTest, ExpandEstimateAttributesEndpoints) {
  const auto id = create_age_scan();
  const auto base = "/api/sessions/" + id;
  auto ex = call("POST", base + "/expand", R"({"vertex":0,"direction":"out"})");
  EXPECT_EQ(ex.data().dump(),
            R"({"vertices":[{"id":1,"type":"person"},{"id":2,"type":"person"}],)"
            R"("edges":[{"id":0,"type":"knows","source":0,"target":1},{"id":2,"type":"knows","source":0,"target":2}],)"
            R"("truncated":false})");
  EXPECT_EQ(call("POST", base + "/estimate", R"({"vertex":2,"direction":"both"})").data().dump(),
            R"({"count":3})");

  auto attrs = call("POST", base + "/attributes",
                    R"({"elements":[{"class":"vertex","id":0},{"class":"edge","id":4}],"names":["age"]})");
  EXPECT_EQ(attrs.code(), "invalid_spec");  // edges have no "age"
  attrs = call("POST", base + "/attributes", R"({"elements":[{"class":"vertex","id":0}],"names":["name","age"]})");
  EXPECT_EQ(attrs.data().dump(),
            R"({"values":[{"class":"vertex","id":0,"attrs":{"age":{"t":"int","v":20},"name":null}}],"warnings":[]})");

  EXPECT_EQ(call("POST", base + "/edge/3/endpoints").data().dump(),
            R"({"source":{"id":2,"type":"person"},"target":{"id":3,"type":"person"}})");
  EXPECT_EQ(call("POST", base + "/edge/99/endpoints").status, 410);
  EXPECT_EQ(call("POST", base + "/edge/x/endpoints").status, 400);
}

TEST_F(ServiceTest, DeleteEndpointAndStaleness) {
  const auto id = create_age_scan();
  const auto base = "/api/sessions/" + id;
  auto stored = call("POST", base + "/bookmarks",
                     R"({"description":"seed pair","payload":{"vertices":[{"id":0,"type":"person","attrs":{}},)"
                     R"({"id":1,"type":"person","attrs":{}}],"edges":[{"id":0,"type":"knows","source":0,"target":1,"attrs":{}}]}})");
  ASSERT_EQ(stored.status, 201) << stored.body.dump();
  const auto bid = stored.data().at("id").get<std::string>();
  EXPECT_EQ(bid, "bm-1700000000-00000001");

  auto del = call("POST", "/api/datasets/g0/elements:delete", R"({"class":"vertex","id":1})");
  EXPECT_EQ(del.data().dump(), R"({"version":1})");
  EXPECT_EQ(call("POST", "/api/datasets/g0/elements:delete", R"({"class":"vertex","id":1})").status, 410);

  auto restored = call("POST", base + "/bookmarks/" + bid + "/restore");
  EXPECT_EQ(restored.data().at("staleness").dump(),
            R"([{"class":"vertex","id":1,"reason":"deleted"},{"class":"edge","id":0,"reason":"deleted"}])");
  EXPECT_EQ(restored.data().at("payload").at("vertices").size(), 2u);

  auto warn = call("POST", base + "/attributes", R"({"elements":[{"class":"vertex","id":1}],"names":["age"]})");
  EXPECT_EQ(warn.data().at("warnings").dump(), R"([{"class":"vertex","id":1,"reason":"deleted"}])");
}

TEST_F(ServiceTest, BookmarkListingAndDangling) {
  const auto a = create_age_scan();
  const auto b = create_age_scan();
  call("POST", "/api/sessions/" + a + "/bookmarks", R"({"payload":{"vertices":[],"edges":[]}})");
  call("POST", "/api/sessions/" + b + "/bookmarks", R"({"payload":{"vertices":[],"edges":[]},"description":"b"})");
  EXPECT_EQ(call("GET", "/api/bookmarks").data().size(), 2u);
  auto only_b = call("GET", "/api/bookmarks?session=" + b).data();
  ASSERT_EQ(only_b.size(), 1u);
  EXPECT_EQ(only_b[0].at("description"), "b");

  auto dangling = call("POST", "/api/sessions/" + a + "/bookmarks",
                       R"({"payload":{"vertices":[{"id":0,"type":"person","attrs":{}}],)"
                       R"("edges":[{"id":1,"type":"knows","source":1,"target":2,"attrs":{}}]}})");
  EXPECT_EQ(dangling.status, 400);
  EXPECT_EQ(dangling.code(), "dangling_edge");
}

TEST_F(ServiceTest, HeldLeaseAnswersBusy) {
  const auto id = create_age_scan();
  auto session = svc_.sessions().find(id);
  auto lease = session->try_acquire();
  ASSERT_TRUE(lease);
  for (const char* action : {"/continue", "/stop", "/expand"}) {
    auto r = call("POST", "/api/sessions/" + id + action, R"({"vertex":0})");
    EXPECT_EQ(r.status, 409);
    EXPECT_EQ(r.code(), "session_busy");
  }
  // Reads do not take the lease.
  EXPECT_EQ(call("GET", "/api/sessions/" + id).status, 200);
}

TEST(ServiceConcurrency, SecondContinueDuringLongScanIsRejected) {
  pgtest::TempDir dir;
  Service svc(ServiceOptions{dir.path(), [] { return std::int64_t{1}; }});
  svc.add_dataset(generate_dataset({.seed = 3, .scale = 200000, .name = "big"}));
  auto created = svc.route("POST", "/api/sessions",
                           R"({"dataset":"big","spec":{"kind":"edge-scan"},)"
                           R"("breakpoints":[{"conjuncts":[{"attr":"weight","op":"lt","value":{"t":"float","v":-1.0}}]}]})");
  const auto id = wire::parse(created.body, ErrorCode::kIoError).at("data").at("session_id").get<std::string>();
  const auto target = "/api/sessions/" + id + "/continue";

  std::atomic<bool> finished{false};
  HttpResponse first;
  std::thread runner([&] {
    first = svc.route("POST", target, "");
    finished = true;
  });
  auto session = svc.sessions().find(id);
  while (!finished && session->snapshot().status != SessionStatus::kRunning) std::this_thread::yield();
  std::vector<HttpResponse> others;
  while (!finished) others.push_back(svc.route("POST", target, ""));
  runner.join();

  EXPECT_EQ(first.status, 200);
  EXPECT_NE(first.body.find("exhausted"), std::string::npos);
  for (const auto& r : others) {
    EXPECT_EQ(r.status, 409);
    EXPECT_TRUE(r.body.find("session_busy") != std::string::npos ||
                r.body.find("session_terminal") != std::string::npos);
  }
}

}  // namespace
}  // namespace pausegraph
