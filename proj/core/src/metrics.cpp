#include "lln/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace lln {

FlowMetrics aggregate_flow(const FlowStats &fs, SimTime duration, SimTime interval_us) {
  FlowMetrics m;
  m.flow_id = fs.flow_id;
  m.retx_timeout = fs.retx_timeout;
  m.retx_fast = fs.retx_fast;
  m.retx_sack = fs.retx_sack;
  if (duration <= 0) {
    m.valid = false;
    return m;
  }
  m.valid = true;
  m.goodput_bps = static_cast<double>(fs.payload_delivered) * 8.0 /
                  (static_cast<double>(duration) / kSecond);
  m.segment_loss = fs.segs_sent == 0
                       ? 0.0
                       : 1.0 - static_cast<double>(fs.segs_delivered) /
                                   static_cast<double>(fs.segs_sent);
  if (!fs.rtt_samples.empty()) {
    std::vector<SimTime> sorted = fs.rtt_samples;
    std::sort(sorted.begin(), sorted.end());
    m.rtt_median_us = nearest_rank(sorted, 0.5);
    m.rtt_q1_us = nearest_rank(sorted, 0.25);
    m.rtt_q3_us = nearest_rank(sorted, 0.75);
    m.rtt_mean_us = std::accumulate(sorted.begin(), sorted.end(), SimTime{0}) /
                    static_cast<SimTime>(sorted.size());
  }
  m.reliability = fs.generated == 0
                      ? 1.0
                      : static_cast<double>(fs.delivered_readings) /
                            static_cast<double>(fs.generated);
  if (!fs.latencies.empty()) {
    std::vector<SimTime> sorted = fs.latencies;
    std::sort(sorted.begin(), sorted.end());
    m.latency_median_us = nearest_rank(sorted, 0.5);
    m.latency_q1_us = nearest_rank(sorted, 0.25);
    m.latency_q3_us = nearest_rank(sorted, 0.75);
  }
  if (interval_us > 0) {
    std::size_t n_intervals = static_cast<std::size_t>(duration / interval_us);
    m.interval_goodput_bps.assign(n_intervals, 0.0);
    for (const auto &[t, bytes] : fs.deliveries) {
      std::size_t idx = static_cast<std::size_t>(t / interval_us);
      if (idx < n_intervals) {
        m.interval_goodput_bps[idx] +=
            static_cast<double>(bytes) * 8.0 / (static_cast<double>(interval_us) / kSecond);
      }
    }
  }
  return m;
}

std::vector<double> pooled_interval_goodputs(const std::vector<FlowMetrics> &flows) {
  std::vector<double> pooled;
  for (const auto &f : flows) {
    pooled.insert(pooled.end(), f.interval_goodput_bps.begin(), f.interval_goodput_bps.end());
  }
  return pooled;
}

QuartileSummary quartiles(std::vector<double> samples) {
  QuartileSummary q;
  if (samples.empty()) return q;
  std::sort(samples.begin(), samples.end());
  q.q1 = nearest_rank(samples, 0.25);
  q.median = nearest_rank(samples, 0.5);
  q.q3 = nearest_rank(samples, 0.75);
  return q;
}

} // namespace lln
