#pragma once

#include <abtuple/audit.hpp>
#include <abtuple/classify.hpp>
#include <abtuple/element.hpp>
#include <abtuple/enumerate.hpp>
#include <abtuple/errors.hpp>
#include <abtuple/generate.hpp>
#include <abtuple/integer.hpp>
#include <abtuple/io.hpp>
#include <abtuple/json.hpp>
#include <abtuple/lattice.hpp>
#include <abtuple/property.hpp>
#include <abtuple/rational.hpp>
#include <abtuple/structure.hpp>
#include <abtuple/tuple.hpp>
