#pragma once

#include "schubert/complement.hpp"
#include "schubert/parallel.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/rank.hpp"
#include "schubert/rc.hpp"
#include "schubert/schubert.hpp"
#include "schubert/verify.hpp"
