// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "abc/bc_tree.hpp"
#include "abc/closed_form.hpp"
#include "abc/errors.hpp"
#include "abc/harmonic.hpp"
#include "abc/instances.hpp"
#include "abc/interval.hpp"
#include "abc/opt_result.hpp"
#include "abc/optimizer.hpp"
#include "abc/oracle.hpp"
#include "abc/params.hpp"
#include "abc/rational.hpp"
#include "abc/svbwc.hpp"
#include "abc/time_fn.hpp"
#include "abc/verify.hpp"
