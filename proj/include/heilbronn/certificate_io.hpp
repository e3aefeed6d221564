#pragma once

// JSON serialization of Stepanov certificates.

#include <string>

#include "heilbronn/stepanov.hpp"

namespace hb {

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

}  // namespace hb
