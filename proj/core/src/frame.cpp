#include "lln/frame.hpp"

#include <stdexcept>

namespace lln {

FrameOccupancy occupancy_for_frame(int frame_bytes) {
  if (frame_bytes < 0 || frame_bytes > kMtuBytes) {
    throw std::invalid_argument("frame length exceeds the 127-byte MTU");
  }
  SimTime air = air_time_us(frame_bytes);
  return {air, air + kAttemptOverheadUs};
}

} // namespace lln
