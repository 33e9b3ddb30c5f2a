#pragma once

#include "stickforge/error.hpp"
#include "stickforge/exact.hpp"
#include "stickforge/graph.hpp"
#include "stickforge/arc_presentation.hpp"
#include "stickforge/catalog.hpp"
#include "stickforge/circular_diagram.hpp"
#include "stickforge/stick_builder.hpp"
#include "stickforge/bounds.hpp"
#include "stickforge/vec3.hpp"
#include "stickforge/tolerances.hpp"
#include "stickforge/equilateral_builder.hpp"
#include "stickforge/verifier.hpp"
#include "stickforge/io.hpp"
#include "stickforge/random_presentation.hpp"
