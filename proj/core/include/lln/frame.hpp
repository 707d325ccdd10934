#pragma once

#include <cstdint>

#include "lln/datagram.hpp"
#include "lln/sim_time.hpp"

namespace lln {

enum class FrameKind : std::uint8_t { Data, Ack, DataRequest };

// IEEE 802.15.4 timing model at the standard 250 kb/s rate.
//
// A unicast attempt occupies the sender's radio for a deterministic
// window: a fixed pre-air lead (SPI copy of the frame into the radio and
// carrier sampling), the on-air time, and the ACK wait. The constants
// are calibrated so that a full 127-byte frame costs 7200 us per
// attempt while spending 4064 us in the air.
constexpr int kMtuBytes = 127;
constexpr int kLinkAckBytes = 11;
constexpr SimTime kAirUsPerByte = 32; // 8 bits / 250 kb/s
constexpr SimTime kAttemptPreUs = 2272;
constexpr SimTime kAckWaitUs = 864;         // macAckWaitDuration
constexpr SimTime kAckTurnaroundUs = 192;   // aTurnaroundTime, 12 symbols
constexpr SimTime kAttemptOverheadUs = kAttemptPreUs + kAckWaitUs;
constexpr SimTime kCsmaUnitBackoffUs = 320; // aUnitBackoffPeriod

constexpr SimTime air_time_us(int frame_bytes) { return frame_bytes * kAirUsPerByte; }

struct FrameOccupancy {
  SimTime air_us;
  SimTime radio_busy_us;
};

// Sender-side cost model of one acknowledged unicast attempt.
FrameOccupancy occupancy_for_frame(int frame_bytes);

// One link frame. Fragment fields describe which slice of the datagram
// payload this frame carries; the payload bytes themselves live in the
// transport buffers, never in the frame.
struct Frame {
  NodeId src = 0;
  NodeId dst = 0;
  FrameKind kind = FrameKind::Data;
  std::uint16_t length = 0; // bytes on air, <= 127
  bool requires_ack = true;
  bool frame_pending = false; // more queued indirect frames follow
  std::uint8_t mac_seq = 0;

  DatagramPtr dgram;
  std::uint32_t frag_offset = 0;
  std::uint32_t frag_len = 0;
  std::uint16_t frag_index = 0;
  std::uint16_t frag_count = 1;
};

} // namespace lln
