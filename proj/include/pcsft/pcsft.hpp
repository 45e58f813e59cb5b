#pragma once

#include "pcsft/correspondence.hpp"
#include "pcsft/dynamics.hpp"
#include "pcsft/expm.hpp"
#include "pcsft/gaussian_state.hpp"
#include "pcsft/phase_space.hpp"
#include "pcsft/polynomial_variable.hpp"
#include "pcsft/random.hpp"
#include "pcsft/random_ops.hpp"
#include "pcsft/types.hpp"
