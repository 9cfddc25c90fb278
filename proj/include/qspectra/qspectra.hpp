#pragma once

// Umbrella header for the qspectra workbench.

#include "qspectra/braiding.hpp"
#include "qspectra/charalg.hpp"
#include "qspectra/check.hpp"
#include "qspectra/heckerep.hpp"
#include "qspectra/io.hpp"
#include "qspectra/laurent.hpp"
#include "qspectra/partitions.hpp"
#include "qspectra/ratfunc.hpp"
#include "qspectra/rational.hpp"
#include "qspectra/scalar.hpp"
#include "qspectra/series.hpp"
#include "qspectra/spectral.hpp"
#include "qspectra/tensor.hpp"
#include "qspectra/verify.hpp"
