#include <array>

#include "doctest.h"
#include "support/generators.hpp"
#include "turnstile/requirements.hpp"
#include "turnstile/world.hpp"

using namespace turnstile;
using turnstile::testing::make_state;

namespace {

template <typename T>
concept HasEnters = requires(T value) { value.enters; };

// Machine-scoped predicates receive a view without the zoo's history: that
// they cannot read `enters` is a property of the API surface itself.
static_assert(!HasEnters<TurnstileView>);
static_assert(HasEnters<WorldState>);

std::array<std::size_t, 5> counts(const WorldState& s) {
  return {s.pushes.count(), s.enters.count(), s.coins.count(),
          s.locks.count(), s.unlocks.count()};
}

}  // namespace

TEST_CASE("initial state is empty and locked") {
  const WorldState s = initial_state();
  for (EventKind k : kAllEventKinds) {
    CHECK(history_for(s, k).count() == 0);
  }
  CHECK(lock_status(s) == LockStatus::Locked);
  CHECK(opt1_invariant(s));
}

TEST_CASE("event kinds round-trip through their wire names") {
  for (EventKind k : kAllEventKinds) {
    CHECK(parse_event_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_event_kind("spin").has_value());
  CHECK(is_machine_controlled(EventKind::Lock));
  CHECK(is_machine_controlled(EventKind::Unlock));
  CHECK(is_world_controlled(EventKind::Push));
  CHECK(is_world_controlled(EventKind::Enter));
  CHECK(is_world_controlled(EventKind::Coin));
}

TEST_CASE("apply_event extends exactly the selected history") {
  const WorldState s = apply_event(initial_state(), {EventKind::Coin, 100});
  CHECK(s.coins == testing::history_of({100}));
  CHECK(s.enters.is_empty());
  CHECK(s.pushes.is_empty());
  CHECK(s.locks.is_empty());
  CHECK(s.unlocks.is_empty());
}

TEST_CASE("apply_event propagates non-monotone timestamps") {
  const WorldState s = make_state({}, {}, {}, {50}, {});
  CHECK_THROWS_AS((void)apply_event(s, {EventKind::Lock, 40}),
                  NonMonotoneTimestamp);
}

TEST_CASE("applying each kind once touches every history once") {
  WorldState s = initial_state();
  Timestamp t = 1;
  for (EventKind k : kAllEventKinds) {
    s = apply_event(s, {k, t++});
  }
  for (EventKind k : kAllEventKinds) {
    CHECK(history_for(s, k).count() == 1);
  }
}

TEST_CASE("lock status") {
  CHECK(lock_status(make_state({}, {}, {}, {}, {})) == LockStatus::Locked);
  CHECK(lock_status(make_state({}, {}, {}, {}, {10})) == LockStatus::Unlocked);
  CHECK(lock_status(make_state({}, {}, {}, {20}, {10})) == LockStatus::Locked);
  CHECK(lock_status(make_state({}, {}, {}, {10}, {20})) == LockStatus::Unlocked);
}

TEST_CASE("property: apply_event changes exactly one history") {
  testing::Random random(0xab12u);
  for (int round = 0; round < 2'000; ++round) {
    const WorldState s = random.reachable_state(10);
    Timestamp latest = -1;
    for (EventKind k : kAllEventKinds) {
      const EventHistory& h = history_for(s, k);
      if (!h.is_empty()) {
        latest = std::max(latest, h.last());
      }
    }
    const TraceEvent e{random.kind(),
                       latest + 1 + static_cast<Timestamp>(random.below(50))};
    const WorldState next = apply_event(s, e);

    const auto before = counts(s);
    const auto after = counts(next);
    int changed = 0;
    for (std::size_t i = 0; i < before.size(); ++i) {
      if (before[i] != after[i]) {
        ++changed;
      }
    }
    CHECK(changed == 1);
    CHECK(history_for(next, e.kind).count() ==
          history_for(s, e.kind).count() + 1);
    CHECK(history_for(next, e.kind).last() == e.at);
  }
}

TEST_CASE("property: ind2 guard agrees with the lock status") {
  testing::Random random(0x77aau);
  for (int round = 0; round < 2'000; ++round) {
    const WorldState s = random.reachable_state(10);
    CHECK(ind2_guard(s) == (lock_status(s) == LockStatus::Unlocked));
  }
}

TEST_CASE("state hashing respects value equality") {
  const WorldStateHash hash;
  const WorldState a = make_state({1}, {2}, {}, {}, {3});
  const WorldState b = make_state({1}, {2}, {}, {}, {3});
  CHECK(a == b);
  CHECK(hash(a) == hash(b));
  const WorldState c = make_state({1}, {2}, {}, {3}, {});
  CHECK(a != c);  // same multiset of times, different hosts
  CHECK(hash(a) != hash(c));
}
