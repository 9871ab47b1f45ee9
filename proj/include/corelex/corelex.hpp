#pragma once

#include "corelex/basic_sense.hpp"
#include "corelex/classifier.hpp"
#include "corelex/corpus.hpp"
#include "corelex/error.hpp"
#include "corelex/lexgen.hpp"
#include "corelex/matcher.hpp"
#include "corelex/pipeline.hpp"
#include "corelex/polyclass.hpp"
#include "corelex/porter.hpp"
#include "corelex/semtypes.hpp"
#include "corelex/sense_inventory.hpp"
#include "corelex/version.hpp"
