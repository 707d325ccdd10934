#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lln/event_engine.hpp"
#include "lln/sim_time.hpp"

namespace lln {

enum class TransportProto : std::uint8_t { Tcp, Coap, Udp };

struct SackBlock {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

// TCP segment header carried by a datagram. Sequence numbers are 64-bit
// absolute stream offsets; wire wraparound is not modeled. Payload bytes
// are never copied into the segment: they are resolved against the live
// send buffer of the owning connection (see TcpConn), so the only
// payload storage in the whole stack is the two connection buffers.
struct TcpSegMeta {
  std::uint32_t conn_id = 0;
  std::uint64_t seq = 0;
  std::uint64_t ack = 0;
  bool syn = false, fin = false, rst = false, has_ack = false;
  bool ece = false, cwr = false;
  std::uint32_t wnd = 0;
  std::uint32_t mss_opt = 0;
  SimTime ts_val = 0;
  SimTime ts_ecr = 0;
  std::vector<SackBlock> sacks;
  std::uint32_t payload_len = 0; // bytes; stream range [seq, seq+payload_len)
};

enum class CoapKind : std::uint8_t { Confirmable, NonConfirmable, Response };

struct CoapMeta {
  std::uint32_t exchange_id = 0;
  CoapKind kind = CoapKind::Confirmable;
  std::uint32_t payload_len = 0;
  // Application accounting: readings carried by this message.
  std::uint64_t reading_first = 0;
  std::uint32_t reading_count = 0;
  std::uint32_t chunk_index = 0;
  std::uint32_t chunk_total = 1;
};

// One end-to-end network datagram (a TCP segment or a CoAP/UDP message).
// Fragmentation into link frames happens per hop; the datagram object is
// shared by its fragments.
struct Datagram {
  std::uint64_t id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  std::uint32_t flow = 0;
  TransportProto proto = TransportProto::Udp;
  std::uint32_t payload_len = 0;
  bool ecn_capable = false;
  bool ce = false; // congestion experienced, set by RED marking on any fragment
  SimTime created = 0;
  TcpSegMeta tcp;
  CoapMeta coap;
};

using DatagramPtr = std::shared_ptr<Datagram>;

} // namespace lln
