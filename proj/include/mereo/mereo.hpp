#pragma once
// Convenience umbrella for the whole library.

#include "core.hpp"
#include "enumerate.hpp"
#include "equivalence.hpp"
#include "fixtures.hpp"
#include "model_io.hpp"
#include "parthood.hpp"
#include "report.hpp"
#include "sum.hpp"
