// Umbrella header.
#pragma once

#include "cechtower/abelian.hpp"
#include "cechtower/cochain.hpp"
#include "cechtower/cohomology.hpp"
#include "cechtower/complex.hpp"
#include "cechtower/exactseq.hpp"
#include "cechtower/integers.hpp"
#include "cechtower/matrix.hpp"
#include "cechtower/spectral.hpp"
#include "cechtower/tower.hpp"
