#pragma once

#include "sidon/bounds.hpp"
#include "sidon/construct.hpp"
#include "sidon/equations.hpp"
#include "sidon/field.hpp"
#include "sidon/numtheory.hpp"
#include "sidon/search.hpp"
#include "sidon/sets.hpp"
#include "sidon/verify.hpp"
