#include "lln/topology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace lln {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 2;

std::vector<Topology::Link> parse_edge_list(const std::string &body, double default_prob) {
  std::vector<Topology::Link> edges;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string::npos) end = body.size();
    std::string item = body.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    double prob = default_prob;
    std::size_t at = item.find('@');
    if (at != std::string::npos) {
      prob = std::stod(item.substr(at + 1));
      item = item.substr(0, at);
    }
    std::size_t dash = item.find('-');
    if (dash == std::string::npos) {
      throw std::invalid_argument("topology edge '" + item + "' is not of the form a-b");
    }
    int a = std::stoi(item.substr(0, dash));
    int b = std::stoi(item.substr(dash + 1));
    if (a < 0 || b < 0 || a == b) {
      throw std::invalid_argument("topology edge '" + item + "' is invalid");
    }
    edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b), prob});
  }
  return edges;
}

} // namespace

Topology Topology::chain(int hops, double deliver_prob, InterferenceModel model) {
  if (hops < 1) throw std::invalid_argument("chain topology needs at least one hop");
  std::vector<Link> edges;
  for (int i = 0; i < hops; ++i) {
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), deliver_prob});
  }
  return from_edges(edges, 0, model);
}

Topology Topology::from_edges(const std::vector<Link> &edges, NodeId border,
                              InterferenceModel model) {
  if (edges.empty()) throw std::invalid_argument("topology has no edges");
  NodeId max_id = 0;
  for (const auto &e : edges) max_id = std::max({max_id, e.from, e.to});

  Topology t;
  t.present_.assign(max_id + 1, 0);
  t.nbr_.assign(max_id + 1, {});
  t.prob_.assign(max_id + 1, std::vector<double>(max_id + 1, 0.0));
  for (const auto &e : edges) {
    if (e.deliver_prob < 0.0 || e.deliver_prob > 1.0) {
      throw std::invalid_argument("link delivery probability must be in [0,1]");
    }
    t.present_[e.from] = t.present_[e.to] = 1;
    // Links are bidirectional with the same delivery probability unless
    // the same pair appears twice with different values.
    if (t.prob_[e.from][e.to] == 0.0) t.nbr_[e.from].push_back(e.to);
    if (t.prob_[e.to][e.from] == 0.0) t.nbr_[e.to].push_back(e.from);
    t.prob_[e.from][e.to] = e.deliver_prob;
    if (t.prob_[e.to][e.from] == 0.0) t.prob_[e.to][e.from] = e.deliver_prob;
  }
  for (NodeId n = 0; n <= max_id; ++n) {
    if (t.present_[n]) t.ids_.push_back(n);
    std::sort(t.nbr_[n].begin(), t.nbr_[n].end());
  }
  if (!t.exists(border)) throw std::invalid_argument("border router is not a topology node");
  t.border_ = border;
  t.roles_.assign(max_id + 1, Role::Router);
  t.roles_[border] = Role::BorderRouter;
  t.finalize(model);
  return t;
}

void Topology::finalize(InterferenceModel model) {
  model_ = model;
  std::size_t n = present_.size();

  // All-pairs hop distances (graphs here are tiny).
  dist_.assign(n, std::vector<int>(n, kUnreachable));
  for (NodeId s : ids_) {
    dist_[s][s] = 0;
    std::deque<NodeId> q{s};
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop_front();
      for (NodeId v : nbr_[u]) {
        if (dist_[s][v] > dist_[s][u] + 1) {
          dist_[s][v] = dist_[s][u] + 1;
          q.push_back(v);
        }
      }
    }
  }
  for (NodeId a : ids_) {
    for (NodeId b : ids_) {
      if (dist_[a][b] >= kUnreachable) {
        throw std::invalid_argument("topology is disconnected");
      }
    }
  }

  int reach = model == InterferenceModel::OneHop ? 1 : 2;
  interf_.assign(n, std::vector<char>(n, 0));
  interf_list_.assign(n, {});
  affected_.assign(n, {});
  for (NodeId rx : ids_) {
    for (NodeId tx : ids_) {
      if (tx == rx) continue;
      if (dist_[tx][rx] <= reach) {
        interf_[rx][tx] = 1;
        interf_list_[rx].push_back(tx);
        affected_[tx].push_back(rx);
      }
    }
  }

  // Deterministic shortest-path next hops, smallest neighbor id wins ties.
  next_hop_.assign(n, std::vector<NodeId>(n, 0));
  for (NodeId from : ids_) {
    for (NodeId to : ids_) {
      if (from == to) {
        next_hop_[from][to] = to;
        continue;
      }
      NodeId best = from;
      int best_d = kUnreachable;
      for (NodeId v : nbr_[from]) {
        if (dist_[v][to] + 1 < best_d) {
          best_d = dist_[v][to] + 1;
          best = v;
        }
      }
      next_hop_[from][to] = best;
    }
  }
}

void Topology::set_role(NodeId n, Role r) {
  if (!exists(n)) throw std::invalid_argument("set_role: unknown node");
  if (r == Role::BorderRouter && n != border_) {
    throw std::invalid_argument("border router is unique");
  }
  if (n == border_ && r != Role::BorderRouter) {
    throw std::invalid_argument("cannot demote the border router");
  }
  roles_[n] = r;
}

bool Topology::has_edge(NodeId from, NodeId to) const {
  return exists(from) && exists(to) && prob_[from][to] > 0.0;
}

double Topology::deliver_prob(NodeId from, NodeId to) const {
  return prob_[from][to];
}

NodeId Topology::next_hop(NodeId from, NodeId to) const {
  return next_hop_[from][to];
}

Topology Topology::parse(const std::string &descriptor, double deliver_prob,
                         InterferenceModel model) {
  if (descriptor.rfind("chain-", 0) == 0) {
    int hops = std::stoi(descriptor.substr(6));
    return chain(hops, deliver_prob, model);
  }
  if (descriptor == "tree15") {
    // 15-node tree rooted at node 1; depths reach 4 hops and nodes
    // 12..15 sit at the greatest depth, mirroring an indoor multihop
    // deployment shape.
    return parse("tree:1-2,1-3,2-4,2-5,3-6,4-7,4-8,5-9,5-10,6-11,7-12,8-13,9-14,10-15",
                 deliver_prob, model);
  }
  if (descriptor.rfind("tree:", 0) == 0) {
    auto edges = parse_edge_list(descriptor.substr(5), deliver_prob);
    NodeId border = edges.front().from;
    for (const auto &e : edges) border = std::min({border, e.from, e.to});
    return from_edges(edges, border, model);
  }
  throw std::invalid_argument("unknown topology descriptor '" + descriptor + "'");
}

} // namespace lln
