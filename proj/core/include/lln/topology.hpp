#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lln/event_engine.hpp"

namespace lln {

enum class Role : std::uint8_t { BorderRouter, Router, Leaf };

enum class InterferenceModel : std::uint8_t { OneHop, TwoHop };

// Static mesh description: communication edges with per-link frame
// delivery probability, plus the interference relation used for
// reception arbitration. Interference always contains the comm edges
// (a node interferes wherever it can communicate); the two-hop model
// additionally lets transmissions corrupt receptions one hop beyond
// communication range, which is what produces hidden-terminal losses.
class Topology {
public:
  struct Link {
    NodeId from;
    NodeId to;
    double deliver_prob;
  };

  static Topology chain(int hops, double deliver_prob,
                        InterferenceModel model = InterferenceModel::TwoHop);
  static Topology from_edges(const std::vector<Link> &edges, NodeId border,
                             InterferenceModel model = InterferenceModel::TwoHop);

  // Descriptor forms: "chain-N", "tree:a-b,c-d[@p],...", "tree15"
  // (builtin 15-node testbed-like tree rooted at node 1).
  static Topology parse(const std::string &descriptor, double deliver_prob,
                        InterferenceModel model);

  bool exists(NodeId n) const { return n < present_.size() && present_[n]; }
  const std::vector<NodeId> &node_ids() const { return ids_; }
  std::size_t node_count() const { return ids_.size(); }
  NodeId border_router() const { return border_; }
  NodeId max_id() const { return static_cast<NodeId>(present_.size() - 1); }

  Role role(NodeId n) const { return roles_[n]; }
  void set_role(NodeId n, Role r);

  bool has_edge(NodeId from, NodeId to) const;
  double deliver_prob(NodeId from, NodeId to) const;
  const std::vector<NodeId> &neighbors(NodeId n) const { return nbr_[n]; }

  // True if transmissions from tx corrupt concurrent receptions at rx.
  bool interferes(NodeId tx, NodeId rx) const { return interf_[rx][tx] != 0; }
  const std::vector<NodeId> &interferers(NodeId rx) const { return interf_list_[rx]; }
  // Reverse view: every node whose receptions transmissions of tx can corrupt.
  const std::vector<NodeId> &affected_by(NodeId tx) const { return affected_[tx]; }

  NodeId next_hop(NodeId from, NodeId to) const;
  int hop_distance(NodeId from, NodeId to) const { return dist_[from][to]; }

  InterferenceModel interference_model() const { return model_; }

private:
  void finalize(InterferenceModel model);

  std::vector<char> present_;
  std::vector<NodeId> ids_;
  std::vector<Role> roles_;
  std::vector<std::vector<NodeId>> nbr_;
  std::vector<std::vector<double>> prob_;
  std::vector<std::vector<char>> interf_;
  std::vector<std::vector<NodeId>> interf_list_;
  std::vector<std::vector<NodeId>> affected_;
  std::vector<std::vector<NodeId>> next_hop_;
  std::vector<std::vector<int>> dist_;
  NodeId border_ = 0;
  InterferenceModel model_ = InterferenceModel::TwoHop;
};

} // namespace lln
