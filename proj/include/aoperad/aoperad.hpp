#pragma once

#include "aoperad/acceptance.hpp"
#include "aoperad/action_operad.hpp"
#include "aoperad/braid.hpp"
#include "aoperad/error.hpp"
#include "aoperad/g_operad.hpp"
#include "aoperad/monad.hpp"
#include "aoperad/operad_io.hpp"
#include "aoperad/perm.hpp"
#include "aoperad/product.hpp"
#include "aoperad/pseudocomm.hpp"
#include "aoperad/report.hpp"
