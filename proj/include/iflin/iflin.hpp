#pragma once

#include "iflin/errors.hpp"
#include "iflin/ginverse.hpp"
#include "iflin/grid.hpp"
#include "iflin/linalg.hpp"
#include "iflin/rational.hpp"
#include "iflin/releq.hpp"
#include "iflin/scalar.hpp"
#include "iflin/spans.hpp"
#include "iflin/transforms.hpp"
