#pragma once

#include "farey/checked_int.hpp"
#include "farey/constants.hpp"
#include "farey/error.hpp"
#include "farey/fraction.hpp"
#include "farey/franel.hpp"
#include "farey/identities.hpp"
#include "farey/index.hpp"
#include "farey/mapping.hpp"
#include "farey/sequence.hpp"
#include "farey/totient.hpp"
