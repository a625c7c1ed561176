#include "report.hpp"

#include "error.hpp"

namespace wkl {

void Report::add(std::string_view key, std::string_view value) {
  lines_.emplace_back(std::string(key), std::string(value));
}

void Report::add_num(std::string_view key, uint64_t value) {
  add(key, std::to_string(value));
}

void Report::add_seq(std::string_view key, const Seq& s, Alphabet a) {
  add(key, render_seq(s, a));
}

void Report::add_seqs(std::string_view key, const std::vector<Seq>& seqs,
                      Alphabet a) {
  std::string value;
  for (const Seq& s : seqs) {
    if (!value.empty()) value += ' ';
    value += render_seq(s, a);
  }
  add(key, value);
}

void Report::add_nums(std::string_view key,
                      const std::vector<uint32_t>& values) {
  std::string value;
  for (uint32_t v : values) {
    if (!value.empty()) value += ' ';
    value += std::to_string(v);
  }
  add(key, value);
}

std::string Report::text() const {
  std::string out;
  for (const auto& [key, value] : lines_) {
    out += key;
    if (!value.empty()) {
      out += ' ';
      out += value;
    }
    out += '\n';
  }
  return out;
}

Report Report::parse(const std::string& text) {
  Report r;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string line = text.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    pos = eol == std::string::npos ? text.size() : eol + 1;
    if (line.empty()) continue;
    size_t space = line.find(' ');
    if (space == std::string::npos) {
      r.add(line, "");
    } else {
      r.add(line.substr(0, space), line.substr(space + 1));
    }
  }
  return r;
}

std::optional<std::string> Report::first(std::string_view key) const {
  for (const auto& [k, v] : lines_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::vector<std::string> Report::all(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : lines_) {
    if (k == key) out.push_back(v);
  }
  return out;
}

std::string Report::need(std::string_view key) const {
  auto v = first(key);
  if (!v) {
    fail(ErrorKind::kParse, "report-missing-key: " + std::string(key));
  }
  return *v;
}

uint64_t Report::need_num(std::string_view key) const {
  std::string v = need(key);
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    fail(ErrorKind::kParse, "report-bad-number: " + std::string(key));
  }
  return std::stoull(v);
}

std::vector<std::string> split_fields(const std::string& value) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < value.size()) {
    size_t space = value.find(' ', pos);
    std::string tok = value.substr(
        pos, space == std::string::npos ? std::string::npos : space - pos);
    if (!tok.empty()) out.push_back(tok);
    pos = space == std::string::npos ? value.size() : space + 1;
  }
  return out;
}

}  // namespace wkl
