#pragma once

#include "bits.hpp"
#include "bounds.hpp"
#include "constructions.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "guessing.hpp"
#include "optima.hpp"
#include "property.hpp"
#include "ramsey.hpp"
#include "rational.hpp"
#include "tape.hpp"
#include "transforms.hpp"
