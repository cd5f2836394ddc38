#include "gcw/maps.hpp"
