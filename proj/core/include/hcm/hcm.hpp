#pragma once

#include "hcm/bounds.hpp"
#include "hcm/colour.hpp"
#include "hcm/colouring.hpp"
#include "hcm/errors.hpp"
#include "hcm/extractor.hpp"
#include "hcm/generators.hpp"
#include "hcm/matching.hpp"
#include "hcm/oracle.hpp"
#include "hcm/structure.hpp"
#include "hcm/trace.hpp"
#include "hcm/triple.hpp"
#include "hcm/vertex_set.hpp"
