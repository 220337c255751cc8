#pragma once

#include "sunisb/coherent.hpp"
#include "sunisb/error.hpp"
#include "sunisb/exact_linalg.hpp"
#include "sunisb/fock.hpp"
#include "sunisb/isb.hpp"
#include "sunisb/liealg.hpp"
#include "sunisb/manifold.hpp"
#include "sunisb/rational.hpp"
#include "sunisb/serialize.hpp"
#include "sunisb/verify.hpp"
