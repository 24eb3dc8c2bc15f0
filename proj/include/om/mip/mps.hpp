#pragma once

#include <filesystem>
#include <ostream>

#include "om/mip/model.hpp"

namespace om::mip {

/// Serialize the model as free-format MPS. Output is byte-stable for a given
/// model: sections, columns and rows appear in declaration order.
void write_mps(const LinearModel& model, std::ostream& out);

/// write_mps to a file; throws on I/O failure.
void export_model(const LinearModel& model, const std::filesystem::path& path);

}  // namespace om::mip
