#include "records.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"
#include "values.hpp"

namespace qtwist::cli {

namespace {

std::string text(const Field& field) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(Real v) const { return format_real(v); }
    std::string operator()(const Complex& v) const { return format_complex(v); }
  } visitor;
  return std::visit(visitor, field);
}

nlohmann::ordered_json json_value(const Field& field) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(Real v) const { return static_cast<double>(v); }
    nlohmann::ordered_json operator()(const Complex& v) const {
      return {{"re", static_cast<double>(v.real())}, {"im", static_cast<double>(v.imag())}};
    }
  } visitor;
  return std::visit(visitor, field);
}

void render_csv(std::ostream& out, const std::vector<Record>& records) {
  if (records.empty()) return;
  auto row = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << csv_escape(cells[k]);
    out << "\r\n";
  };
  // A column is split in two when any row holds a complex value there.
  const auto& keys = records.front().fields;
  std::vector<bool> split(keys.size(), false);
  for (const auto& record : records) {
    for (std::size_t k = 0; k < record.fields.size() && k < split.size(); ++k) {
      split[k] = split[k] || std::holds_alternative<Complex>(record.fields[k].second);
    }
  }
  std::vector<std::string> header;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (split[k]) {
      header.push_back(keys[k].first + "_re");
      header.push_back(keys[k].first + "_im");
    } else {
      header.push_back(keys[k].first);
    }
  }
  row(header);
  for (const auto& record : records) {
    std::vector<std::string> cells;
    for (std::size_t k = 0; k < record.fields.size(); ++k) {
      const Field& value = record.fields[k].second;
      if (k < split.size() && split[k]) {
        const auto* z = std::get_if<Complex>(&value);
        cells.push_back(z ? format_real(z->real()) : "");
        cells.push_back(z ? format_real(z->imag()) : "");
      } else {
        cells.push_back(text(value));
      }
    }
    row(cells);
  }
}

void render_plain(std::ostream& out, const std::vector<Record>& records) {
  if (records.empty()) return;
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header;
  for (const auto& field : records.front().fields) header.push_back(field.first);
  table.push_back(header);
  for (const auto& record : records) {
    std::vector<std::string> cells;
    for (const auto& field : record.fields) cells.push_back(text(field.second));
    table.push_back(cells);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& cells : table) {
    for (std::size_t k = 0; k < cells.size() && k < width.size(); ++k) width[k] = std::max(width[k], cells[k].size());
  }
  for (const auto& cells : table) {
    std::string line;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      line += cells[k];
      if (k + 1 < cells.size()) line += std::string(width[k] - cells[k].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

}  // namespace

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void render(std::ostream& out, const std::vector<Record>& records, Format format) {
  switch (format) {
    case Format::csv:
      render_csv(out, records);
      break;
    case Format::plain:
      render_plain(out, records);
      break;
    case Format::json: {
      auto array = nlohmann::ordered_json::array();
      for (const auto& record : records) {
        nlohmann::ordered_json object = nlohmann::ordered_json::object();
        for (const auto& [key, value] : record.fields) object[key] = json_value(value);
        array.push_back(std::move(object));
      }
      out << array.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace qtwist::cli
