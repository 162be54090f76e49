#pragma once

#include "curvature/errors.hpp"
#include "curvature/rational.hpp"
#include "curvature/circle.hpp"
#include "curvature/cluster.hpp"
#include "curvature/state_complex.hpp"
#include "curvature/homology.hpp"
#include "curvature/elliptope.hpp"
#include "curvature/io.hpp"
#include "curvature/sampling.hpp"
#include "curvature/properties.hpp"
