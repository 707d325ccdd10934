#include "lln/medium.hpp"

#include <algorithm>

namespace lln {

namespace {
constexpr std::uint64_t kPhyStreamBase = 0x100;
} // namespace

Medium::Medium(Engine &eng, const Topology &topo, std::uint64_t seed)
    : eng_(eng), topo_(topo) {
  rx_rng_.reserve(topo.max_id() + 1);
  for (NodeId n = 0; n <= topo.max_id(); ++n) {
    rx_rng_.emplace_back(seed, kPhyStreamBase + n);
  }
}

bool Medium::channel_busy(NodeId listener) const {
  for (const auto &t : active_) {
    if (t.src == listener) return true;
    if (topo_.has_edge(t.src, listener)) return true;
  }
  return false;
}

void Medium::node_stopped_listening(NodeId n) {
  for (auto &t : active_) {
    if (t.frame.dst == n && !t.corrupted) {
      t.corrupted = true;
      t.cause = (sleeping_ && sleeping_(n)) ? LossCause::Sleep : LossCause::Collision;
    }
  }
}

void Medium::begin_tx(NodeId src, const Frame &frame, SimTime air_us) {
  ActiveTx tx;
  tx.id = next_id_++;
  tx.src = src;
  tx.frame = frame;
  tx.start = eng_.now();
  tx.end = eng_.now() + air_us;
  tx.corrupted = false;
  tx.cause = LossCause::Collision;

  NodeId dst = frame.dst;
  if (!listening_ || !listening_(dst)) {
    tx.corrupted = true;
    tx.cause = (sleeping_ && sleeping_(dst)) ? LossCause::Sleep : LossCause::Collision;
  }
  for (auto &other : active_) {
    // Overlap with anything audible at our destination corrupts us;
    // our transmission likewise corrupts receptions we can reach.
    if (other.src != src && topo_.interferes(other.src, dst) && !tx.corrupted) {
      tx.corrupted = true;
      tx.cause = LossCause::Collision;
    }
    if (topo_.interferes(src, other.frame.dst) && src != other.frame.dst && !other.corrupted) {
      other.corrupted = true;
      other.cause = LossCause::Collision;
    }
    // A node cannot decode while transmitting: if the destination is
    // mid-transmission this reception is already corrupted via the
    // listening check above.
  }
  active_.push_back(std::move(tx));

  std::uint64_t id = active_.back().id;
  eng_.schedule(active_.back().end, static_cast<std::int32_t>(src), "phy.tx_end",
                [this, id] { end_tx(id); });
}

void Medium::end_tx(std::uint64_t id) {
  auto it = std::find_if(active_.begin(), active_.end(),
                         [id](const ActiveTx &t) { return t.id == id; });
  if (it == active_.end()) return;
  ActiveTx tx = *it;
  active_.erase(it);

  NodeId dst = tx.frame.dst;
  bool delivered = false;
  LossCause cause = tx.cause;
  if (!tx.corrupted && listening_ && listening_(dst)) {
    double p = topo_.deliver_prob(tx.src, dst);
    if (rx_rng_[dst].chance(p)) {
      delivered = true;
    } else {
      cause = LossCause::Random;
    }
  } else if (!tx.corrupted) {
    // Left listening exactly at the boundary without a notify.
    cause = (sleeping_ && sleeping_(dst)) ? LossCause::Sleep : LossCause::Collision;
  }

  if (on_result_) on_result_(tx.frame, delivered, cause);
  if (delivered && on_decode_) on_decode_(dst, tx.frame);
}

} // namespace lln
