#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lln/event_engine.hpp"
#include "lln/sim_time.hpp"

namespace lln {

enum class LossCause : std::uint8_t { Collision, Sleep, Random, QueueDrop };
enum class RetxCause : std::uint8_t { Timeout, Fast, SackHole };

struct LinkStats {
  std::uint64_t attempts = 0;        // frame transmissions, including retries
  std::uint64_t frames_delivered = 0;
  std::uint64_t retries = 0;
  std::uint64_t send_failures = 0;   // frames abandoned after全 retries
  std::uint64_t loss_collision = 0;
  std::uint64_t loss_sleep = 0;
  std::uint64_t loss_random = 0;
  SimTime busy_us = 0;
};

struct NodeStats {
  SimTime on_time_us = 0; // filled at end of run
  std::uint64_t polls = 0;
  std::uint64_t empty_polls = 0;
  std::uint64_t indirect_drops = 0;
  std::uint64_t queue_drops = 0; // relay/tx queue tail drops
  std::uint64_t red_drops = 0;
  std::uint64_t red_marks = 0;
  std::uint64_t reassembly_expired = 0;
  std::uint64_t cpu_drops = 0;
  std::uint64_t injected_drops = 0;
  std::uint64_t duplicates = 0;
};

// Per-flow observations recorded during a run.
struct FlowStats {
  std::uint32_t flow_id = 0;
  NodeId src = 0;
  NodeId dst = 0;

  std::uint64_t payload_delivered = 0; // application payload bytes delivered in order
  std::uint64_t segs_sent = 0;         // data segments handed to the network (incl. retx)
  std::uint64_t segs_delivered = 0;    // data segments that reached the peer transport
  std::uint64_t retx_timeout = 0;
  std::uint64_t retx_fast = 0;
  std::uint64_t retx_sack = 0;
  std::uint64_t aborted = 0;

  // Reading-level accounting for sense-and-send style workloads.
  std::uint64_t generated = 0;
  std::uint64_t delivered_readings = 0;
  std::uint64_t overflow_dropped = 0;

  std::vector<SimTime> rtt_samples;
  std::vector<std::pair<SimTime, std::uint32_t>> deliveries; // (time, payload bytes)
  std::vector<SimTime> latencies;                            // request/response latencies

  // Time-weighted occupancy of min(cwnd, sndbuf)/sndbuf.
  double cwnd_weighted = 0.0;
  SimTime cwnd_tracked_us = 0;

  void record_rtt(SimTime s) { rtt_samples.push_back(s); }
  void record_delivery(SimTime t, std::uint32_t bytes) {
    payload_delivered += bytes;
    deliveries.emplace_back(t, bytes);
  }
  void record_retx(RetxCause c) {
    switch (c) {
    case RetxCause::Timeout: ++retx_timeout; break;
    case RetxCause::Fast: ++retx_fast; break;
    case RetxCause::SackHole: ++retx_sack; break;
    }
  }
};

// Summary of one flow per the reporting conventions used throughout:
// goodput in bits per second, post-link-retry segment loss, nearest-rank
// RTT quartiles, reliability as delivered/generated.
struct FlowMetrics {
  std::uint32_t flow_id = 0;
  bool valid = false;
  double goodput_bps = 0.0;
  double segment_loss = 0.0;
  SimTime rtt_median_us = 0;
  SimTime rtt_q1_us = 0;
  SimTime rtt_q3_us = 0;
  SimTime rtt_mean_us = 0;
  std::uint64_t retx_timeout = 0;
  std::uint64_t retx_fast = 0;
  std::uint64_t retx_sack = 0;
  double reliability = 1.0;
  SimTime latency_median_us = 0;
  SimTime latency_q1_us = 0;
  SimTime latency_q3_us = 0;
  std::vector<double> interval_goodput_bps; // fixed-length intervals
};

// Nearest-rank quantile of a sorted sample: value at rank ceil(q * n).
template <typename T> T nearest_rank(const std::vector<T> &sorted, double q) {
  if (sorted.empty()) return T{};
  std::size_t rank = static_cast<std::size_t>(q * static_cast<double>(sorted.size()) + 0.9999999);
  if (rank < 1) rank = 1;
  if (rank > sorted.size()) rank = sorted.size();
  return sorted[rank - 1];
}

FlowMetrics aggregate_flow(const FlowStats &fs, SimTime duration, SimTime interval_us);

// Pooled interval goodputs across flows (fairness view): returns the
// per-interval, per-flow goodput samples of all flows concatenated.
std::vector<double> pooled_interval_goodputs(const std::vector<FlowMetrics> &flows);

struct QuartileSummary {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double iqr() const { return q3 - q1; }
};

QuartileSummary quartiles(std::vector<double> samples);

} // namespace lln
