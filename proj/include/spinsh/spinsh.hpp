// Umbrella header for the spinsh library.
#pragma once

#include "spinsh/basis.hpp"
#include "spinsh/catalog/extract.hpp"
#include "spinsh/catalog/registry.hpp"
#include "spinsh/catalog/sweep.hpp"
#include "spinsh/catalog/types.hpp"
#include "spinsh/clebsch.hpp"
#include "spinsh/direction.hpp"
#include "spinsh/halfint.hpp"
#include "spinsh/harmonics.hpp"
#include "spinsh/legendre.hpp"
#include "spinsh/rational.hpp"
#include "spinsh/report.hpp"
#include "spinsh/spherical.hpp"
#include "spinsh/tensor.hpp"
#include "spinsh/version.hpp"

