#pragma once

#include "tpsym/common.hpp"
#include "tpsym/entanglement.hpp"
#include "tpsym/index_map.hpp"
#include "tpsym/json_io.hpp"
#include "tpsym/partitions.hpp"
#include "tpsym/perm.hpp"
#include "tpsym/perm_engine.hpp"
#include "tpsym/render.hpp"
#include "tpsym/spectral.hpp"
