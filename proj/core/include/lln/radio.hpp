#pragma once

#include "lln/sim_time.hpp"

namespace lln {

enum class RadioMode : std::uint8_t { Sleep, IdleListen, Rx, Tx, CsmaBackoff };

// Radio power/mode bookkeeping for one node. on_time accrues in every
// mode except Sleep; duty cycle over a window is the on-time delta
// divided by the window length.
class Radio {
public:
  explicit Radio(bool deaf_listening = false) : deaf_listening_(deaf_listening) {}

  RadioMode mode() const { return mode_; }

  void set_mode(SimTime now, RadioMode m) {
    accrue(now);
    mode_ = m;
  }

  // Listening means able to decode a frame: awake, not mid-air on our
  // own transmission, and not in a deaf CSMA backoff.
  bool listening() const {
    if (mode_ == RadioMode::Sleep || mode_ == RadioMode::Tx) return false;
    if (mode_ == RadioMode::CsmaBackoff && deaf_listening_) return false;
    return true;
  }

  bool deaf_listening() const { return deaf_listening_; }
  void set_deaf_listening(bool v) { deaf_listening_ = v; }

  SimTime on_time(SimTime now) const {
    SimTime t = on_time_;
    if (mode_ != RadioMode::Sleep) t += now - last_change_;
    return t;
  }

private:
  void accrue(SimTime now) {
    if (mode_ != RadioMode::Sleep) on_time_ += now - last_change_;
    last_change_ = now;
  }

  RadioMode mode_ = RadioMode::IdleListen;
  SimTime last_change_ = 0;
  SimTime on_time_ = 0;
  bool deaf_listening_ = false;
};

} // namespace lln
