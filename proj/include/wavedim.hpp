#pragma once

#include "wavedim/analysis.hpp"
#include "wavedim/core.hpp"
#include "wavedim/error.hpp"
#include "wavedim/estimators.hpp"
#include "wavedim/generators.hpp"
#include "wavedim/harness.hpp"
#include "wavedim/io.hpp"
