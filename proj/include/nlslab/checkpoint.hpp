// Field checkpoints: JSON header followed by a flat little-endian complex
// array (re/im interleaved doubles).
#pragma once

#include <string>

#include "nlslab/grid.hpp"
#include "nlslab/io_util.hpp"

namespace nlslab {

void write_checkpoint(const std::string& path, const Field& f, const std::string& config_hash = "");
Field read_checkpoint(const std::string& path, json* header_out = nullptr);

} // namespace nlslab
