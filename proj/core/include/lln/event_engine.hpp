#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "lln/sim_time.hpp"

namespace lln {

using NodeId = std::uint16_t;
constexpr std::int32_t kNoNode = -1;

// Handle for a scheduled event; cancel() through the engine. seq 0 is invalid.
struct EventHandle {
  std::uint64_t seq = 0;
  bool valid() const { return seq != 0; }
};

// Single-threaded discrete event engine. Events fire in (fire_at, seq)
// order; seq is a monotone tiebreaker assigned at schedule time. All
// protocol state is owned by the event loop and handlers run to
// completion one at a time.
class Engine {
public:
  using Callback = std::function<void()>;

  SimTime now() const { return now_; }

  // Schedules `cb` at absolute time `at`. Scheduling in the past is a
  // programming error and throws.
  EventHandle schedule(SimTime at, std::int32_t node, const char *kind, Callback cb,
                       std::string detail = {});
  EventHandle schedule_in(SimTime delay, std::int32_t node, const char *kind, Callback cb,
                          std::string detail = {});

  // A cancelled event never fires and never mutates state.
  void cancel(EventHandle &h);

  // Processes every event with fire_at <= t_end and advances the clock
  // to exactly t_end. Returns the number of events processed.
  std::uint64_t run_until(SimTime t_end);

  // Drains the queue completely (useful in tests).
  std::uint64_t run_all();

  bool empty() const { return live_events_ == 0; }
  std::uint64_t scheduled_total() const { return next_seq_ - 1; }

  // Optional line-oriented trace of processed events:
  //   time_us seq node kind detail
  void set_trace(std::ostream *out) { trace_ = out; }

private:
  struct Entry {
    SimTime fire_at;
    std::uint64_t seq;
    std::int32_t node;
    const char *kind;
    Callback cb;
    std::string detail;
  };
  struct Later {
    bool operator()(const Entry &a, const Entry &b) const {
      if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
      return a.seq > b.seq;
    }
  };

  void dispatch(Entry &e);

  SimTime now_ = 0;
  std::uint64_t next_seq_ = 1;
  std::uint64_t live_events_ = 0;
  std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
  std::unordered_set<std::uint64_t> cancelled_;
  std::ostream *trace_ = nullptr;
};

} // namespace lln
