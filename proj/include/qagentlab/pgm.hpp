#pragma once

#include "qagentlab/qie.hpp"

#include <filesystem>
#include <iosfwd>

namespace qal::pgm {

struct PgmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// P2 (ASCII) and P5 (binary) portable graymaps, maxval 255 only.
qie::GrayImage read(std::istream &in);
qie::GrayImage read(const std::filesystem::path &path);

// Always written as binary P5.
void write(std::ostream &out, const qie::GrayImage &img);
void write(const std::filesystem::path &path, const qie::GrayImage &img);

} // namespace qal::pgm
