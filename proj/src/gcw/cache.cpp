#include "gcw/cache.hpp"
