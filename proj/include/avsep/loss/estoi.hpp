#pragma once

#include "avsep/signal/waveform.hpp"

namespace avsep::loss {

// Extended short-time objective intelligibility. Follows the reference
// algorithm: resample to 10 kHz, drop frames more than 40 dB below the
// loudest reference frame, 15 one-third-octave bands from 150 Hz, and
// row/column-normalized correlation over 30-frame segments.
//
// Throws if the inputs differ in length, the reference is silent, or fewer
// than 30 analysis frames survive the silence gate.
double estoi(const signal::Waveform& est, const signal::Waveform& ref);

}  // namespace avsep::loss
