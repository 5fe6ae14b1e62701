#pragma once

#include "protree/bits.hpp"
#include "protree/bounds.hpp"
#include "protree/canonical.hpp"
#include "protree/construct.hpp"
#include "protree/dot.hpp"
#include "protree/error.hpp"
#include "protree/json_io.hpp"
#include "protree/oracle.hpp"
#include "protree/rank.hpp"
#include "protree/shape.hpp"
#include "protree/text.hpp"
#include "protree/trace.hpp"
#include "protree/transform.hpp"
#include "protree/tree.hpp"
