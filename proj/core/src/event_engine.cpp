#include "lln/event_engine.hpp"

#include <stdexcept>
#include <utility>

namespace lln {

EventHandle Engine::schedule(SimTime at, std::int32_t node, const char *kind, Callback cb,
                             std::string detail) {
  if (at < now_) {
    throw std::logic_error("Engine::schedule: event scheduled in the past");
  }
  Entry e{at, next_seq_++, node, kind, std::move(cb), std::move(detail)};
  EventHandle h{e.seq};
  queue_.push(std::move(e));
  ++live_events_;
  return h;
}

EventHandle Engine::schedule_in(SimTime delay, std::int32_t node, const char *kind, Callback cb,
                                std::string detail) {
  return schedule(now_ + delay, node, kind, std::move(cb), std::move(detail));
}

void Engine::cancel(EventHandle &h) {
  if (!h.valid()) return;
  if (cancelled_.insert(h.seq).second) --live_events_;
  h.seq = 0;
}

void Engine::dispatch(Entry &e) {
  now_ = e.fire_at;
  if (trace_) {
    (*trace_) << e.fire_at << ' ' << e.seq << ' ' << e.node << ' ' << e.kind;
    if (!e.detail.empty()) (*trace_) << ' ' << e.detail;
    (*trace_) << '\n';
  }
  e.cb();
}

std::uint64_t Engine::run_until(SimTime t_end) {
  std::uint64_t processed = 0;
  while (!queue_.empty() && queue_.top().fire_at <= t_end) {
    Entry e = queue_.top();
    queue_.pop();
    auto it = cancelled_.find(e.seq);
    if (it != cancelled_.end()) {
      cancelled_.erase(it);
      continue;
    }
    --live_events_;
    dispatch(e);
    ++processed;
  }
  if (t_end > now_) now_ = t_end;
  return processed;
}

std::uint64_t Engine::run_all() {
  std::uint64_t processed = 0;
  while (!queue_.empty()) {
    Entry e = queue_.top();
    queue_.pop();
    auto it = cancelled_.find(e.seq);
    if (it != cancelled_.end()) {
      cancelled_.erase(it);
      continue;
    }
    --live_events_;
    dispatch(e);
    ++processed;
  }
  return processed;
}

} // namespace lln
