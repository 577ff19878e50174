#pragma once

// Umbrella header.

#include "invgen/bench.hpp"
#include "invgen/core.hpp"
#include "invgen/growth.hpp"
#include "invgen/instance.hpp"
#include "invgen/modp.hpp"
#include "invgen/oracle.hpp"
#include "invgen/seedgen.hpp"
