#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qtwist/numerics.hpp"

namespace qtwist::cli {

enum class Format { plain, csv, json };

/// Null, exact or text, integer, flag, float, complex pair.
using Field = std::variant<std::monostate, std::string, long, bool, Real, Complex>;

struct Record {
  std::vector<std::pair<std::string, Field>> fields;

  Record& add(std::string key, Field value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

/// All records in one stream share their keys; the first record fixes the header.
/// A CSV column holding complex values becomes two columns, KEY_re and KEY_im.
void render(std::ostream& out, const std::vector<Record>& records, Format format);

std::string csv_escape(const std::string& cell);

}  // namespace qtwist::cli
