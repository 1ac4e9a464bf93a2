#include <string>

#include "doctest.h"
#include "support/generators.hpp"
#include "turnstile/trace.hpp"

using namespace turnstile;
using turnstile::testing::make_trace;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    (void)parse_trace(text);
  } catch (const TraceParseError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST_CASE("serialization is exact and byte-deterministic") {
  const Trace trace = make_trace({{EventKind::Coin, 100},
                                  {EventKind::Unlock, 150},
                                  {EventKind::Push, 200},
                                  {EventKind::Lock, 900},
                                  {EventKind::Enter, 950}},
                                 1000);
  const std::string expected =
      "{\"event\":\"coin\",\"t\":100}\n"
      "{\"event\":\"unlock\",\"t\":150}\n"
      "{\"event\":\"push\",\"t\":200}\n"
      "{\"event\":\"lock\",\"t\":900}\n"
      "{\"event\":\"enter\",\"t\":950}\n"
      "{\"closed_at\":1000}\n";
  CHECK(serialize_trace(trace) == expected);
  CHECK(serialize_trace(trace) == serialize_trace(trace));
}

TEST_CASE("parsing accepts whitespace and blank lines") {
  const Trace trace = parse_trace(
      "{\"event\": \"coin\", \"t\": 100}\n"
      "\n"
      "{ \"event\" : \"lock\" , \"t\" : 200 }\n"
      "{\"closed_at\": 300}\n");
  CHECK(trace == make_trace({{EventKind::Coin, 100}, {EventKind::Lock, 200}},
                            300));
}

TEST_CASE("round trip: parse after serialize is the identity") {
  testing::Random random(0x1234u);
  for (int round = 0; round < 500; ++round) {
    const Trace trace = random.valid_trace(12);
    CHECK(parse_trace(serialize_trace(trace)) == trace);
  }
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("{\"event\": \"spin\"}") == 1);
  CHECK(parse_error_line("{\"event\": \"spin\", \"t\": 1}") == 1);
  CHECK(parse_error_line("not json at all") == 1);
  CHECK(parse_error_line("[1, 2]") == 1);
  CHECK(parse_error_line("{\"event\": \"coin\", \"t\": -5}") == 1);
  CHECK(parse_error_line("{\"event\": \"coin\", \"t\": 1.5}") == 1);
  CHECK(parse_error_line("{\"event\": \"coin\"}") == 1);
  CHECK(parse_error_line("{\"event\": \"coin\", \"t\": 1, \"x\": 2}") == 1);
  CHECK(parse_error_line("{\"event\":\"coin\",\"t\":5}\n"
                         "{\"event\":\"push\",\"t\":5}\n") == 2);
  CHECK(parse_error_line("{\"event\":\"coin\",\"t\":5}\n"
                         "{\"event\":\"push\",\"t\":4}\n") == 2);
  CHECK(parse_error_line("{\"event\":\"coin\",\"t\":5}\n"
                         "{\"closed_at\":4}\n") == 2);
  CHECK(parse_error_line("{\"closed_at\":4}\n"
                         "{\"event\":\"coin\",\"t\":5}\n") == 2);
  CHECK(parse_error_line("{\"closed_at\":4,\"t\":1}") == 1);
  CHECK(parse_error_line("{\"closed_at\":-1}") == 1);
}

TEST_CASE("parse errors mention the offending input") {
  try {
    (void)parse_trace("{\"event\": \"spin\", \"t\": 1}");
    FAIL("expected TraceParseError");
  } catch (const TraceParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("spin") != std::string::npos);
    CHECK(what.find("line 1") != std::string::npos);
  }
}

TEST_CASE("trace validation") {
  CHECK_NOTHROW(validate_trace(make_trace({}, 0)));
  CHECK_NOTHROW(validate_trace(make_trace({{EventKind::Coin, 0}})));

  // cross-kind ties are ill-formed: order at equal times would be ambiguous
  Trace tied;
  tied.events = {{EventKind::Coin, 5}, {EventKind::Push, 5}};
  CHECK_THROWS_AS(validate_trace(tied), IllFormedTrace);

  Trace negative;
  negative.events = {{EventKind::Coin, -1}};
  CHECK_THROWS_AS(validate_trace(negative), IllFormedTrace);

  Trace closed_early = make_trace({{EventKind::Coin, 10}}, 9);
  CHECK_THROWS_AS(validate_trace(closed_early), IllFormedTrace);
}

TEST_CASE("file round trip") {
  const Trace trace = make_trace({{EventKind::Coin, 1}}, 10);
  const std::string path = "trace_io_roundtrip.jsonl";
  write_trace_file(path, trace);
  CHECK(read_trace_file(path) == trace);
  std::remove(path.c_str());
  CHECK_THROWS_AS((void)read_trace_file("does_not_exist.jsonl"),
                  TraceParseError);
}
