#include <doctest.h>

#include <algorithm>
#include <vector>

#include "binmach/machine.hpp"

using namespace binmach;

namespace {

const char* kExampleBits = "0011011100101110110";

// Supports of the 5-stage machine for kExampleBits under zero-sink,
// derived independently by tabulating s_i -> s_{i+1 mod n} edges.
const std::vector<std::vector<std::uint32_t>> kExampleSupports = {
    {1, 2, 4, 5, 7, 8, 10, 12, 13, 15, 19},  // f0
    {0, 1, 5, 8, 9, 11, 12, 13, 21},         // f1
    {3, 4, 5, 9, 10, 13, 17, 19, 21},        // f2
    {6, 7, 8, 10, 11, 13, 17, 21},           // f3
    {12, 15, 19},                            // f4
};

BinaryMachine example_machine(RemainingStatePolicy policy) {
  return build_machine(assign_states(BinarySequence::parse(kExampleBits)), policy);
}

}  // namespace

TEST_CASE("build_machine reproduces the worked example supports") {
  const BinaryMachine m = example_machine(RemainingStatePolicy::zero_sink);
  CHECK(m.stages() == 5);
  CHECK(m.state_count() == 32);
  CHECK(m.initial_state() == 0);
  REQUIRE(m.supports().size() == 5);
  for (int j = 0; j < 5; ++j) CHECK(m.support(j) == kExampleSupports[static_cast<std::size_t>(j)]);
}

TEST_CASE("transition follows the assigned state chain") {
  const BinaryMachine m = example_machine(RemainingStatePolicy::zero_sink);
  CHECK(m.transition(15) == 17);
  CHECK(m.transition(0) == 2);
  CHECK(m.transition(14) == 0);  // wraparound: last state back to the first
  CHECK(m.transition(20) == 0);  // unused state sinks to 0
  CHECK(m.transition(31) == 0);

  try {
    m.transition(32);
    FAIL("expected a state_out_of_range error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::state_out_of_range);
  }
}

TEST_CASE("cycle policy chains the unused states") {
  const BinaryMachine m = example_machine(RemainingStatePolicy::cycle);
  // Used states: the 19 assigned ones; the other 13 form their own loop.
  const std::vector<std::uint32_t> unused = {16, 18, 20, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31};
  for (std::size_t i = 0; i < unused.size(); ++i)
    CHECK(m.transition(unused[i]) == unused[(i + 1) % unused.size()]);
  // Assigned chain is untouched.
  CHECK(m.transition(15) == 17);

  // The full map is a bijection.
  std::vector<bool> seen(m.state_count(), false);
  for (std::uint32_t x = 0; x < m.state_count(); ++x) {
    const std::uint32_t y = m.transition(x);
    CHECK_FALSE(seen[y]);
    seen[y] = true;
  }
}

TEST_CASE("used_states returns the generation cycle") {
  const BinaryMachine m = example_machine(RemainingStatePolicy::zero_sink);
  const std::vector<std::uint32_t> used = m.used_states();
  CHECK(used.size() == 19);
  CHECK(std::is_sorted(used.begin(), used.end()));
  CHECK(std::find(used.begin(), used.end(), 21) != used.end());
  CHECK(std::find(used.begin(), used.end(), 16) == used.end());

  // A machine whose initial state falls off its cycle has no used-state set.
  const BinaryMachine stray(2, {{}, {0}}, RemainingStatePolicy::zero_sink, 1);
  try {
    stray.used_states();
    FAIL("expected a non_cyclic_reachability error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_cyclic_reachability);
  }
}

TEST_CASE("single-stage machine from the shortest sequence") {
  const BinaryMachine m =
      build_machine(assign_states(BinarySequence::parse("01")), RemainingStatePolicy::zero_sink);
  CHECK(m.stages() == 1);
  CHECK(m.supports() == std::vector<std::vector<std::uint32_t>>{{0}});
  CHECK(m.transition(0) == 1);
  CHECK(m.transition(1) == 0);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(BinaryMachine(0, {}, RemainingStatePolicy::zero_sink, 0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMachine(2, {{0}}, RemainingStatePolicy::zero_sink, 0),
                  std::invalid_argument);  // one support per stage
  CHECK_THROWS_AS(BinaryMachine(2, {{0, 4}, {}}, RemainingStatePolicy::zero_sink, 0),
                  std::invalid_argument);  // support state out of range
  CHECK_THROWS_AS(BinaryMachine(2, {{0, 0}, {}}, RemainingStatePolicy::zero_sink, 0),
                  std::invalid_argument);  // duplicate support state
  CHECK_THROWS_AS(BinaryMachine(2, {{0}, {}}, RemainingStatePolicy::zero_sink, 4),
                  std::invalid_argument);  // initial state out of range
}

TEST_CASE("policy names round-trip") {
  CHECK(to_string(RemainingStatePolicy::zero_sink) == "zero-sink");
  CHECK(to_string(RemainingStatePolicy::cycle) == "cycle");
  CHECK(parse_policy("zero-sink") == RemainingStatePolicy::zero_sink);
  CHECK(parse_policy("cycle") == RemainingStatePolicy::cycle);
  CHECK_FALSE(parse_policy("drain").has_value());
}
