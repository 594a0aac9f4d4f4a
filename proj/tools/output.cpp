#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace minci::cli {

namespace {

std::string twelve_digits(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  std::string s = buf;
  // no "-0.0000"
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') {
    s.erase(0, 1);
  }
  return s;
}

std::size_t display_width(const std::string &s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

Cell read_field(const std::string &text, bool quoted);

std::string csv_field(const Cell &cell) {
  if (const double *x = std::get_if<double>(&cell)) {
    return twelve_digits(*x);
  }
  if (const std::string *s = std::get_if<std::string>(&cell)) {
    // text that would read back as a number or as empty stays quoted
    if (s->find_first_of(",\"\n\r") == std::string::npos &&
        std::holds_alternative<std::string>(read_field(*s, false))) {
      return *s;
    }
    std::string q = "\"";
    for (char c : *s) {
      q += c;
      if (c == '"') {
        q += '"';
      }
    }
    return q + "\"";
  }
  return {};
}

Cell read_field(const std::string &text, bool quoted) {
  if (text.empty() && !quoted) {
    return std::monostate{};
  }
  if (!quoted) {
    char *end = nullptr;
    const double x = std::strtod(text.c_str(), &end);
    if (end == text.c_str() + text.size() && std::isfinite(x)) {
      return x;
    }
  }
  return text;
}

std::string render_csv(const Table &t) {
  std::string out;
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    out += (j ? "," : "") + csv_field(t.columns[j].name);
  }
  out += '\n';
  for (const auto &row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out += (j ? "," : "") + csv_field(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table &t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto &row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size(); ++j) {
      const Cell &c = row[j];
      if (const double *x = std::get_if<double>(&c)) {
        obj[t.columns[j].name] = std::strtod(twelve_digits(*x).c_str(), nullptr);
      } else if (const std::string *s = std::get_if<std::string>(&c)) {
        obj[t.columns[j].name] = *s;
      } else {
        obj[t.columns[j].name] = nullptr;
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

std::string render_table(const Table &t) {
  std::vector<std::vector<std::string>> text;
  std::vector<std::size_t> width(t.columns.size(), 0);
  std::vector<bool> numeric(t.columns.size(), false);
  std::vector<std::string> header;
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    header.push_back(t.columns[j].name);
    width[j] = display_width(header[j]);
  }
  for (const auto &row : t.rows) {
    std::vector<std::string> line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string s;
      if (const double *x = std::get_if<double>(&row[j])) {
        s = t.columns[j].decimals < 0 ? twelve_digits(*x) : fixed(*x, t.columns[j].decimals);
        numeric[j] = true;
      } else if (const std::string *str = std::get_if<std::string>(&row[j])) {
        s = *str;
      }
      width[j] = std::max(width[j], display_width(s));
      line.push_back(std::move(s));
    }
    text.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string> &line) {
    std::string out;
    for (std::size_t j = 0; j < line.size(); ++j) {
      const std::string pad(width[j] - display_width(line[j]), ' ');
      out += (j ? "  " : "") + (numeric[j] ? pad + line[j] : line[j] + pad);
    }
    while (!out.empty() && out.back() == ' ') {
      out.pop_back();
    }
    return out + "\n";
  };
  std::string out = emit(header);
  for (const auto &line : text) {
    out += emit(line);
  }
  return out;
}

} // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "table") {
    return OutputFormat::table;
  }
  if (text == "csv") {
    return OutputFormat::csv;
  }
  if (text == "json") {
    return OutputFormat::json;
  }
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

Cell number(double x) { return x; }

Cell number(const std::optional<double> &x) {
  if (x) {
    return *x;
  }
  return std::monostate{};
}

std::string render(const Table &table, OutputFormat format) {
  switch (format) {
  case OutputFormat::csv:
    return render_csv(table);
  case OutputFormat::json:
    return render_json(table);
  case OutputFormat::table:
    break;
  }
  return render_table(table);
}

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::pair<std::string, bool>>> records;
  std::vector<std::pair<std::string, bool>> record;
  std::string field;
  bool quoted = false, in_quotes = false, at_start = true;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        in_quotes = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty() && !quoted) {
      in_quotes = quoted = true;
    } else if (c == ',') {
      record.emplace_back(std::move(field), quoted);
      field.clear();
      quoted = false;
    } else if (c == '\n') {
      record.emplace_back(std::move(field), quoted);
      records.push_back(std::move(record));
      record.clear();
      field.clear();
      quoted = false;
    } else if (c != '\r') {
      field += c;
    }
    at_start = false;
  }
  if (in_quotes) {
    throw std::invalid_argument("unterminated quoted csv field");
  }
  if (!at_start && (!field.empty() || quoted || !record.empty())) {
    record.emplace_back(std::move(field), quoted);
    records.push_back(std::move(record));
  }
  if (records.empty()) {
    throw std::invalid_argument("csv input has no header");
  }

  Table t;
  for (const auto &[name, q] : records.front()) {
    t.columns.push_back({name});
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.columns.size()) {
      throw std::invalid_argument("csv row " + std::to_string(r) + " has " +
                                  std::to_string(records[r].size()) + " fields, expected " +
                                  std::to_string(t.columns.size()));
    }
    std::vector<Cell> row;
    for (const auto &[value, q] : records[r]) {
      row.push_back(read_field(value, q));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table parse_json(std::string_view text) {
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array()) {
    throw std::invalid_argument("json input is not an array of rows");
  }
  Table t;
  for (const auto &obj : j) {
    if (!obj.is_object()) {
      throw std::invalid_argument("json row is not an object");
    }
    if (t.columns.empty()) {
      for (const auto &[key, value] : obj.items()) {
        t.columns.push_back({key});
      }
    }
    std::vector<Cell> row;
    for (const Column &c : t.columns) {
      if (!obj.contains(c.name)) {
        throw std::invalid_argument("json row lacks column '" + c.name + "'");
      }
      const auto &v = obj.at(c.name);
      if (v.is_number()) {
        row.push_back(v.get<double>());
      } else if (v.is_string()) {
        row.push_back(v.get<std::string>());
      } else if (v.is_null()) {
        row.push_back(std::monostate{});
      } else {
        throw std::invalid_argument("unsupported json value in column '" + c.name + "'");
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

} // namespace minci::cli
