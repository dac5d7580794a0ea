#pragma once

#include "ahn/compound.hpp"
#include "ahn/csv.hpp"
#include "ahn/dataset.hpp"
#include "ahn/demo.hpp"
#include "ahn/errors.hpp"
#include "ahn/export.hpp"
#include "ahn/forecast.hpp"
#include "ahn/grid_search.hpp"
#include "ahn/lse.hpp"
#include "ahn/model_io.hpp"
#include "ahn/molecule.hpp"
#include "ahn/rng.hpp"
#include "ahn/scaler.hpp"
#include "ahn/split.hpp"
#include "ahn/summary.hpp"
#include "ahn/training.hpp"
#include "ahn/windows.hpp"
