#pragma once

#include "coexsim/channel.hpp"
#include "coexsim/engine.hpp"
#include "coexsim/io.hpp"
#include "coexsim/lte_mac.hpp"
#include "coexsim/metrics.hpp"
#include "coexsim/phy_link.hpp"
#include "coexsim/rng.hpp"
#include "coexsim/scenario.hpp"
#include "coexsim/sweep.hpp"
#include "coexsim/time.hpp"
#include "coexsim/topology.hpp"
#include "coexsim/traffic.hpp"
#include "coexsim/units.hpp"
#include "coexsim/wifi_mac.hpp"
