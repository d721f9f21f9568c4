#pragma once

#include "canonical.hpp"
#include "classify.hpp"
#include "codec.hpp"
#include "diagram.hpp"
#include "discharge.hpp"
#include "errors.hpp"
#include "generate.hpp"
#include "laurent.hpp"
#include "map.hpp"
#include "oracle.hpp"
#include "planemap.hpp"
#include "reidemeister.hpp"
#include "rewrite.hpp"
#include "rules.hpp"
