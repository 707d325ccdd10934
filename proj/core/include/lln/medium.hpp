#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lln/event_engine.hpp"
#include "lln/frame.hpp"
#include "lln/metrics.hpp"
#include "lln/radio.hpp"
#include "lln/rng.hpp"
#include "lln/topology.hpp"

namespace lln {

// Shared wireless medium. Tracks every transmission in flight and
// arbitrates reception: the destination decodes a frame iff it was
// listening for the whole airtime, no other transmission audible to it
// (per the interference map) overlapped, and the per-link delivery
// probability draw succeeds. Carrier sense (CCA) hears one comm hop;
// interference may reach further, which is the hidden-terminal case.
class Medium {
public:
  using DecodeFn = std::function<void(NodeId rx, const Frame &)>;
  using ResultFn = std::function<void(const Frame &, bool delivered, LossCause cause)>;
  using ListeningFn = std::function<bool(NodeId)>;
  using SleepingFn = std::function<bool(NodeId)>;

  Medium(Engine &eng, const Topology &topo, std::uint64_t seed);

  void set_decode_handler(DecodeFn fn) { on_decode_ = std::move(fn); }
  void set_result_handler(ResultFn fn) { on_result_ = std::move(fn); }
  void set_listening_fn(ListeningFn fn) { listening_ = std::move(fn); }
  void set_sleeping_fn(SleepingFn fn) { sleeping_ = std::move(fn); }

  // True if any in-flight transmission is audible at `listener`.
  bool channel_busy(NodeId listener) const;

  // Call when a node's radio leaves listening state mid-air; corrupts
  // any reception in progress at that node.
  void node_stopped_listening(NodeId n);

  // Starts an on-air transmission; the end event and arbitration are
  // handled internally.
  void begin_tx(NodeId src, const Frame &frame, SimTime air_us);

  std::uint64_t active_count() const { return active_.size(); }

private:
  struct ActiveTx {
    std::uint64_t id;
    NodeId src;
    Frame frame;
    SimTime start;
    SimTime end;
    bool corrupted;
    LossCause cause;
  };

  void end_tx(std::uint64_t id);

  Engine &eng_;
  const Topology &topo_;
  std::vector<SeededRng> rx_rng_;
  std::vector<ActiveTx> active_;
  std::uint64_t next_id_ = 1;
  DecodeFn on_decode_;
  ResultFn on_result_;
  ListeningFn listening_;
  SleepingFn sleeping_;
};

} // namespace lln
