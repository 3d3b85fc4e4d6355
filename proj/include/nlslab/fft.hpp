// FFTW wrapper with a mutex-guarded plan cache (FFTW_ESTIMATE for
// reproducible plans).  Transforms are unnormalized forward, normalized
// backward.
#pragma once

#include "nlslab/grid.hpp"

namespace nlslab::fft {

void forward(Field& f);  // physical -> spectral, in place
void backward(Field& f); // spectral -> physical, in place (divides by N)

void forward(const Grid& g, cplx* data);
void backward(const Grid& g, cplx* data);

// Spectral derivative along an axis: out = (ik_axis) * f, evaluated via two
// transforms.  `f` stays untouched.
Field derivative(const Field& f, int axis);

// Band-limited upsample by an integer factor per axis (spectrum zero-pad).
Field upsample(const Field& f, int factor);

} // namespace nlslab::fft
