#pragma once

#include "nee/bounds.hpp"
#include "nee/decimation.hpp"
#include "nee/dense_linalg.hpp"
#include "nee/fractal.hpp"
#include "nee/graph.hpp"
#include "nee/indices.hpp"
#include "nee/io.hpp"
#include "nee/spectra.hpp"
#include "nee/summation.hpp"
#include "nee/verification.hpp"
