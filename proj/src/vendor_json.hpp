#ifndef TANDEM_VENDOR_JSON_HPP
#define TANDEM_VENDOR_JSON_HPP

// nlohmann/json single header from vendor/.
#include "json.hpp"

#endif
