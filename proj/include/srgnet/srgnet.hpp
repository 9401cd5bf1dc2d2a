#pragma once

#include "srgnet/entanglement.hpp"
#include "srgnet/errors.hpp"
#include "srgnet/families.hpp"
#include "srgnet/graph.hpp"
#include "srgnet/graph6.hpp"
#include "srgnet/signature.hpp"
#include "srgnet/stratification.hpp"
