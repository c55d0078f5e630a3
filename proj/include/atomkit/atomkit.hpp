#pragma once

// Umbrella header.

#include "atomkit/bigcount.hpp"
#include "atomkit/census.hpp"
#include "atomkit/core.hpp"
#include "atomkit/equivalence.hpp"
#include "atomkit/hecke.hpp"
#include "atomkit/orders.hpp"
#include "atomkit/structure.hpp"
#include "atomkit/tableaux.hpp"
