#pragma once

// Umbrella header for the binary matroid workbench.

#include "matroid/binary_matroid.hpp"
#include "matroid/catalog.hpp"
#include "matroid/chains.hpp"
#include "matroid/class_spec.hpp"
#include "matroid/connectivity.hpp"
#include "matroid/generate.hpp"
#include "matroid/iso.hpp"
#include "matroid/minors.hpp"
#include "matroid/splitter.hpp"
#include "matroid/tables.hpp"
