#pragma once

#include "idring/bytes.hpp"
#include "idring/cost_meter.hpp"
#include "idring/error.hpp"
#include "idring/groups.hpp"
#include "idring/hashing.hpp"
#include "idring/kgc.hpp"
#include "idring/op_counts.hpp"
#include "idring/proxy_ring.hpp"
#include "idring/ring_sig.hpp"
#include "idring/rng.hpp"
#include "idring/wire.hpp"
