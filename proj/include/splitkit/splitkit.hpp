#pragma once

#include "splitkit/catalog.hpp"
#include "splitkit/diagram.hpp"
#include "splitkit/laurent.hpp"
#include "splitkit/moves.hpp"
#include "splitkit/pdparse.hpp"
#include "splitkit/skein.hpp"
#include "splitkit/splitting.hpp"
