#pragma once

#include "unital/appendix.hpp"
#include "unital/appendix_check.hpp"
#include "unital/census.hpp"
#include "unital/design.hpp"
#include "unital/error.hpp"
#include "unital/finite_field.hpp"
#include "unital/group_catalog.hpp"
#include "unital/io.hpp"
#include "unital/nets_latin.hpp"
#include "unital/parallel.hpp"
#include "unital/permgroup.hpp"
#include "unital/perspectivity.hpp"
#include "unital/projective_plane.hpp"
