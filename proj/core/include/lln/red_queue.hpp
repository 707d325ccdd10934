#pragma once

#include <cstdint>
#include <deque>

#include "lln/frame.hpp"
#include "lln/metrics.hpp"
#include "lln/rng.hpp"

namespace lln {

struct RedParams {
  bool enabled = false;
  bool ecn_enabled = false;
  double min_th = 2.0;  // frames
  double max_th = 8.0;  // frames
  double max_p = 0.1;
  double ewma_weight = 0.002;
};

enum class EnqueueResult : std::uint8_t { Enqueued, Marked, Dropped };

// Link-layer transmit queue of one node. Forwarded frames are subject
// to RED with optional ECN marking; locally originated frames only to
// the hard capacity. When a fragment of a datagram is dropped, the
// datagram's remaining fragments are dropped as well: a partial
// datagram can never be reassembled downstream and would only waste
// airtime.
class RelayQueue {
public:
  RelayQueue() = default;
  RelayQueue(std::size_t capacity, RedParams red) : capacity_(capacity), red_(red) {}

  EnqueueResult enqueue(Frame f, bool forwarded, SeededRng &rng, NodeStats &stats);

  bool empty() const { return q_.empty(); }
  std::size_t size() const { return q_.size(); }
  std::size_t capacity() const { return capacity_; }
  double avg() const { return avg_; }
  const RedParams &params() const { return red_; }

  Frame pop_front();

private:
  std::size_t capacity_ = 16;
  RedParams red_;
  std::deque<Frame> q_;
  double avg_ = 0.0;
  std::uint64_t dropping_dgram_ = 0;
};

} // namespace lln
