#pragma once
// nlohmann/json from the vendored single header.
#include "json.hpp"
