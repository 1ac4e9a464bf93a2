#include <algorithm>

#include "doctest.h"
#include "support/generators.hpp"
#include "turnstile/checker.hpp"

using namespace turnstile;
using turnstile::testing::make_trace;

namespace {

const std::vector<Requirement>& registry() {
  static const std::vector<Requirement> r = standard_registry();
  return r;
}

RequirementVerdict verdict(const CheckReport& report,
                           const std::string& label) {
  const auto it =
      std::find_if(report.verdicts.begin(), report.verdicts.end(),
                   [&](const RequirementVerdict& v) { return v.label == label; });
  REQUIRE(it != report.verdicts.end());
  return *it;
}

}  // namespace

TEST_CASE("a well-behaved interaction satisfies every requirement") {
  const Trace trace = make_trace({{EventKind::Coin, 100},
                                  {EventKind::Unlock, 150},
                                  {EventKind::Push, 200},
                                  {EventKind::Lock, 900},
                                  {EventKind::Enter, 950}},
                                 1000);
  const CheckReport report = check_trace(trace, registry());
  CHECK(report.admissible);
  for (const char* label : {"OPT1", "IND2", "OPT7", "OPT2"}) {
    CHECK(verdict(report, label).status == VerdictStatus::Satisfied);
  }
  CHECK(report.final_state.enters.count() == 1);
  CHECK(report.final_state.coins.count() == 1);
}

TEST_CASE("a missing lock violates the timed response at the close marker") {
  const Trace trace = make_trace(
      {{EventKind::Coin, 100}, {EventKind::Unlock, 150}, {EventKind::Push, 200}},
      2000);
  const CheckReport report = check_trace(trace, registry());
  CHECK(report.admissible);
  const RequirementVerdict& opt7 = verdict(report, "OPT7");
  CHECK(opt7.status == VerdictStatus::Violated);
  CHECK(opt7.position == 3);  // the end-of-observation marker
  CHECK(verdict(report, "OPT1").status == VerdictStatus::Satisfied);
  CHECK(verdict(report, "IND2").status == VerdictStatus::Satisfied);
  CHECK(verdict(report, "OPT2").status == VerdictStatus::Satisfied);
}

TEST_CASE("a push on the locked initial state is inadmissible") {
  const Trace trace = make_trace({{EventKind::Push, 10}});
  const CheckReport report = check_trace(trace, registry());
  CHECK_FALSE(report.admissible);
  CHECK(report.inadmissible_position == 0);
  const RequirementVerdict& ind2 = verdict(report, "IND2");
  CHECK(ind2.status == VerdictStatus::Violated);
  CHECK(ind2.position == 0);
  CHECK(verdict(report, "OPT1").status == VerdictStatus::NotAssessed);
  CHECK(verdict(report, "OPT7").status == VerdictStatus::NotAssessed);
  CHECK(verdict(report, "OPT2").status == VerdictStatus::NotAssessed);
  CHECK(report.final_state == initial_state());  // the event never happened
}

TEST_CASE("the empty closed trace satisfies everything") {
  const CheckReport report = check_trace(make_trace({}, 0), registry());
  CHECK(report.admissible);
  for (const RequirementVerdict& v : report.verdicts) {
    CHECK(v.status == VerdictStatus::Satisfied);
  }
}

TEST_CASE("obligation boundary is strict on both sides") {
  const auto base = [](Timestamp lock_at) {
    return make_trace({{EventKind::Coin, 1},
                       {EventKind::Unlock, 2},
                       {EventKind::Push, 100},
                       {EventKind::Lock, lock_at}},
                      2000);
  };

  SUBCASE("discharge at deadline minus one") {
    const CheckReport report = check_trace(base(859), registry());
    CHECK(verdict(report, "OPT7").status == VerdictStatus::Satisfied);
  }
  SUBCASE("a response exactly at the deadline is too late") {
    const CheckReport report = check_trace(base(860), registry());
    const RequirementVerdict& opt7 = verdict(report, "OPT7");
    CHECK(opt7.status == VerdictStatus::Violated);
    CHECK(opt7.position == 3);
  }
  SUBCASE("any event at the deadline expires the obligation") {
    const Trace trace = make_trace({{EventKind::Coin, 1},
                                    {EventKind::Unlock, 2},
                                    {EventKind::Push, 100},
                                    {EventKind::Coin, 860}},
                                   2000);
    const RequirementVerdict& opt7 =
        verdict(check_trace(trace, registry()), "OPT7");
    CHECK(opt7.status == VerdictStatus::Violated);
    CHECK(opt7.position == 3);
  }
  SUBCASE("a close marker at the deadline expires the obligation") {
    const Trace trace = make_trace(
        {{EventKind::Coin, 1}, {EventKind::Unlock, 2}, {EventKind::Push, 100}},
        860);
    const RequirementVerdict& opt7 =
        verdict(check_trace(trace, registry()), "OPT7");
    CHECK(opt7.status == VerdictStatus::Violated);
    CHECK(opt7.position == 3);
  }
  SUBCASE("a close marker just inside the window leaves it pending") {
    const Trace trace = make_trace(
        {{EventKind::Coin, 1}, {EventKind::Unlock, 2}, {EventKind::Push, 100}},
        859);
    const RequirementVerdict& opt7 =
        verdict(check_trace(trace, registry()), "OPT7");
    CHECK(opt7.status == VerdictStatus::Pending);
    REQUIRE(opt7.open_obligations.size() == 1);
    CHECK(opt7.open_obligations[0] ==
          Obligation{"OPT7", 100, 860, EventKind::Lock});
  }
  SUBCASE("an open trace leaves the obligation pending") {
    const Trace trace = make_trace(
        {{EventKind::Coin, 1}, {EventKind::Unlock, 2}, {EventKind::Push, 100}});
    const RequirementVerdict& opt7 =
        verdict(check_trace(trace, registry()), "OPT7");
    CHECK(opt7.status == VerdictStatus::Pending);
  }
  SUBCASE("a lock tied with the push is not even a trace") {
    Trace tied;
    tied.events = {{EventKind::Coin, 1},
                   {EventKind::Unlock, 2},
                   {EventKind::Push, 100},
                   {EventKind::Lock, 100}};
    CHECK_THROWS_AS((void)check_trace(tied, registry()), IllFormedTrace);
  }
}

TEST_CASE("an unmatched enter violates the entries invariant") {
  const Trace trace = make_trace({{EventKind::Enter, 5}}, 100);
  const CheckReport report = check_trace(trace, registry());
  CHECK(report.admissible);  // no indicative law constrains enter
  const RequirementVerdict& opt1 = verdict(report, "OPT1");
  CHECK(opt1.status == VerdictStatus::Violated);
  CHECK(opt1.position == 0);
}

TEST_CASE("a permanently blocked payer violates enabledness at the end") {
  const Trace trace = make_trace({{EventKind::Coin, 5}}, 5000);
  const CheckReport report = check_trace(trace, registry());
  const RequirementVerdict& opt2 = verdict(report, "OPT2");
  CHECK(opt2.status == VerdictStatus::Violated);
  CHECK(opt2.position == 1);  // end-of-observation marker
  // the transient window between a coin and the machine's reaction does not
  // count: the same prefix with a later unlock is satisfied
  const Trace unlocked =
      make_trace({{EventKind::Coin, 5}, {EventKind::Unlock, 400}}, 5000);
  CHECK(verdict(check_trace(unlocked, registry()), "OPT2").status ==
        VerdictStatus::Satisfied);
}

TEST_CASE("violations recorded before an inadmissible event are retained") {
  const Trace trace = make_trace({{EventKind::Coin, 1},
                                  {EventKind::Unlock, 2},
                                  {EventKind::Push, 100},
                                  {EventKind::Coin, 900},
                                  {EventKind::Lock, 920},
                                  {EventKind::Push, 950}});
  const CheckReport report = check_trace(trace, registry());
  CHECK_FALSE(report.admissible);
  CHECK(report.inadmissible_position == 5);
  // the obligation from the push at t=100 expired at the coin at t=900,
  // before the trace became impossible
  const RequirementVerdict& opt7 = verdict(report, "OPT7");
  CHECK(opt7.status == VerdictStatus::Violated);
  CHECK(opt7.position == 3);
  CHECK(verdict(report, "IND2").position == 5);
  CHECK(verdict(report, "OPT1").status == VerdictStatus::NotAssessed);
  CHECK(verdict(report, "OPT2").status == VerdictStatus::NotAssessed);
  CHECK(report.final_state.pushes.count() == 1);  // the last push never happened
}

TEST_CASE("a discharged obligation before an inadmissible event is not assessed") {
  const Trace trace = make_trace({{EventKind::Coin, 1},
                                  {EventKind::Unlock, 2},
                                  {EventKind::Push, 100},
                                  {EventKind::Lock, 150},
                                  {EventKind::Push, 900}});
  const CheckReport report = check_trace(trace, registry());
  CHECK_FALSE(report.admissible);
  CHECK(report.inadmissible_position == 4);
  CHECK(verdict(report, "OPT7").status == VerdictStatus::NotAssessed);
}

TEST_CASE("one response discharges every obligation inside its window") {
  const Trace trace = make_trace({{EventKind::Coin, 1},
                                  {EventKind::Unlock, 2},
                                  {EventKind::Push, 100},
                                  {EventKind::Coin, 200},
                                  {EventKind::Push, 300},
                                  {EventKind::Lock, 800}},
                                 2000);
  // obligations opened at 100 (deadline 860) and 300 (deadline 1060); the
  // lock at 800 lands strictly inside both windows
  CHECK(verdict(check_trace(trace, registry()), "OPT7").status ==
        VerdictStatus::Satisfied);
}

TEST_CASE("deadline processing precedes discharge at the same event") {
  const Trace trace = make_trace({{EventKind::Coin, 1},
                                  {EventKind::Unlock, 2},
                                  {EventKind::Push, 100},
                                  {EventKind::Coin, 200},
                                  {EventKind::Push, 300},
                                  {EventKind::Lock, 900}},
                                 2000);
  // the lock at 900 misses the first window (deadline 860) but discharges
  // the second (deadline 1060)
  const RequirementVerdict& opt7 =
      verdict(check_trace(trace, registry()), "OPT7");
  CHECK(opt7.status == VerdictStatus::Violated);
  CHECK(opt7.position == 5);
}

TEST_CASE("checking is deterministic and does not mutate its inputs") {
  const Trace trace = make_trace(
      {{EventKind::Coin, 100}, {EventKind::Unlock, 150}, {EventKind::Push, 200}},
      2000);
  const Trace copy = trace;
  const CheckReport a = check_trace(trace, registry());
  const CheckReport b = check_trace(trace, registry());
  CHECK(a == b);
  CHECK(trace == copy);
}

TEST_CASE("oracle agrees on the pinned traces") {
  const Trace traces[] = {
      make_trace({{EventKind::Coin, 100},
                  {EventKind::Unlock, 150},
                  {EventKind::Push, 200},
                  {EventKind::Lock, 900},
                  {EventKind::Enter, 950}},
                 1000),
      make_trace({{EventKind::Coin, 100},
                  {EventKind::Unlock, 150},
                  {EventKind::Push, 200}},
                 2000),
      make_trace({{EventKind::Push, 10}}),
      make_trace({}, 0),
  };
  for (const Trace& trace : traces) {
    CHECK(check_trace(trace, registry()) == oracle_check(trace, registry()));
  }
}

TEST_CASE("property: oracle equivalence on random well-formed traces") {
  testing::Random random(0xacedu);
  for (int round = 0; round < 2'000; ++round) {
    const Trace trace = random.valid_trace(12);
    const CheckReport fast = check_trace(trace, registry());
    const CheckReport slow = oracle_check(trace, registry());
    REQUIRE(fast == slow);
  }
}

TEST_CASE("custom registries: optative guards do not cut the trace") {
  std::vector<Requirement> custom = standard_registry();
  custom.push_back(Requirement{
      "OPT9", Mood::Optative, "Coins only while unlocked (made up)",
      "guard(coin) = unlocked",
      EventGuard{EventKind::Coin,
                 [](const WorldState& s) {
                   return lock_status(s) == LockStatus::Unlocked;
                 }}});
  const Trace trace =
      make_trace({{EventKind::Coin, 5}, {EventKind::Coin, 10}}, 100);
  const CheckReport report = check_trace(trace, custom);
  CHECK(report.admissible);  // the failing guard is optative
  const auto it = std::find_if(
      report.verdicts.begin(), report.verdicts.end(),
      [](const RequirementVerdict& v) { return v.label == "OPT9"; });
  REQUIRE(it != report.verdicts.end());
  CHECK(it->status == VerdictStatus::Violated);
  CHECK(it->position == 0);
  CHECK(check_trace(trace, custom) == oracle_check(trace, custom));
}
