#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "poly.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "parallel.hpp"
#include "symgroup.hpp"
#include "matrix.hpp"
#include "characters.hpp"
#include "adet.hpp"
#include "json_io.hpp"
#include "verify.hpp"
