#pragma once

// Umbrella header for the evanslab library: spectral stability of travelling
// and stationary front/pulse solutions of the degenerate reaction-diffusion
// system u_t = u_xx + g(u,v), v_t = D v_xx - g(u,v).

#include "evanslab/types.hpp"
#include "evanslab/polynomial.hpp"
#include "evanslab/ode.hpp"
#include "evanslab/winding.hpp"
#include "evanslab/contour.hpp"
#include "evanslab/root_finding.hpp"
#include "evanslab/threading.hpp"

#include "evanslab/reaction.hpp"
#include "evanslab/wave_profile.hpp"
#include "evanslab/catalog.hpp"

#include "evanslab/spectral_problem.hpp"
#include "evanslab/essential_spectrum.hpp"
#include "evanslab/evans_closed_form.hpp"
#include "evanslab/riccati_evans.hpp"

#include "evanslab/serialize.hpp"
#include "evanslab/csv.hpp"
