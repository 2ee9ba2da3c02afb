#ifndef OMCHAIN_OMCHAIN_HPP
#define OMCHAIN_OMCHAIN_HPP

// Umbrella header for the optomagnomechanical chain simulator.

#include "omchain/config.hpp"
#include "omchain/dynamics.hpp"
#include "omchain/entanglement.hpp"
#include "omchain/errors.hpp"
#include "omchain/io.hpp"
#include "omchain/model.hpp"
#include "omchain/scattering.hpp"
#include "omchain/sweep.hpp"
#include "omchain/teleport.hpp"

#endif // OMCHAIN_OMCHAIN_HPP
