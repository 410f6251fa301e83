#pragma once

#include "landau1d/errors.hpp"
#include "landau1d/grid.hpp"
#include "landau1d/quadrature.hpp"
#include "landau1d/tridiagonal.hpp"
#include "landau1d/potentials.hpp"
#include "landau1d/interactions.hpp"
#include "landau1d/models.hpp"
#include "landau1d/spectral.hpp"
#include "landau1d/two_electron.hpp"
#include "landau1d/binding.hpp"
#include "landau1d/certificates.hpp"
