#pragma once

#include "analysis.hpp"
#include "cmat.hpp"
#include "config.hpp"
#include "eig.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "r4tensor.hpp"
#include "sampling.hpp"
#include "scenario.hpp"
#include "sim.hpp"
