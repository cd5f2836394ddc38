#include "gcw/report.hpp"
