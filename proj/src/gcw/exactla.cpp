#include "gcw/exactla.hpp"
